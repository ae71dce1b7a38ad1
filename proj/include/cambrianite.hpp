#pragma once

#include "cambrianite/error.hpp"
#include "cambrianite/scalar.hpp"
#include "cambrianite/linalg.hpp"
#include "cambrianite/coxeter.hpp"
#include "cambrianite/group.hpp"
#include "cambrianite/sortable.hpp"
#include "cambrianite/fans.hpp"
#include "cambrianite/polytopes.hpp"
#include "cambrianite/cluster.hpp"
#include "cambrianite/classical.hpp"
#include "cambrianite/io.hpp"
#include "cambrianite/verify.hpp"
