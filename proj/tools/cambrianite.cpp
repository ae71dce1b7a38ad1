#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cambrianite.hpp"

namespace cx = cambrianite;

namespace {

int log_level() {
  const char* env = std::getenv("CAMBRIANITE_LOG");
  if (!env) return 0;
  const std::string v = env;
  if (v == "debug" || v == "2") return 2;
  if (v == "info" || v == "1") return 1;
  return 0;
}

void log(int level, const std::string& msg) {
  static const int threshold = log_level();
  if (level <= threshold) std::cerr << "[cambrianite] " << msg << '\n';
}

class Timer {
 public:
  explicit Timer(std::string what) : what_(std::move(what)), start_(std::chrono::steady_clock::now()) {}
  ~Timer() {
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    std::ostringstream os;
    os << what_ << " took " << ms << " ms";
    log(1, os.str());
  }

 private:
  std::string what_;
  std::chrono::steady_clock::time_point start_;
};

struct JobSpec {
  std::string system;
  std::string c;
  std::string base_point;
  std::string export_format;
  std::string out;
  std::string polytope = "asso";
  std::size_t max_order = 100000;
  std::vector<std::string> roots;
};

cx::CoxeterMatrix matrix_from_json(const nlohmann::json& j) {
  cx::CoxeterMatrix cm;
  const nlohmann::json& rows = j.is_object() ? j.at("coxeter_matrix") : j;
  for (const auto& row : rows) {
    std::vector<int> r;
    for (const auto& x : row) r.push_back(x.is_null() ? 0 : x.get<int>());
    cm.entries.push_back(std::move(r));
  }
  if (j.is_object() && j.contains("names")) {
    cm.names = j.at("names").get<std::vector<std::string>>();
  } else {
    for (std::size_t i = 0; i < cm.entries.size(); ++i) cm.names.push_back("s" + std::to_string(i + 1));
  }
  cm.label = j.is_object() && j.contains("label") ? j.at("label").get<std::string>() : "custom";
  cm.validate();
  return cm;
}

// A type name such as "A3" or "I2(7)", a JSON matrix, or a path to a JSON file.
cx::CoxeterMatrix parse_system(const std::string& text) {
  try {
    if (!text.empty() && (text.front() == '[' || text.front() == '{')) return matrix_from_json(nlohmann::json::parse(text));
    if (text.size() > 5 && text.substr(text.size() - 5) == ".json") {
      std::ifstream in(text);
      if (!in) throw cx::Error(cx::ErrorKind::Parse, "cannot open " + text);
      return matrix_from_json(nlohmann::json::parse(in));
    }
  } catch (const nlohmann::json::exception& e) {
    throw cx::Error(cx::ErrorKind::Parse, std::string("bad Coxeter matrix JSON: ") + e.what());
  }
  return cx::coxeter_type(text);
}

cx::BasePoint parse_base_point(const cx::CoxeterSystem& sys, const std::string& text) {
  if (text.empty()) return cx::BasePoint::balanced(sys);
  std::vector<cx::Scalar> coef;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    cx::Rational q;
    if (q.set_str(item, 10) != 0) throw cx::Error(cx::ErrorKind::Parse, "bad base-point coefficient '" + item + "'");
    q.canonicalize();
    coef.emplace_back(q);
  }
  if (coef.size() != sys.rank())
    throw cx::Error(cx::ErrorKind::Parse, "base point needs " + std::to_string(sys.rank()) + " coefficients");
  return cx::BasePoint(sys, coef);
}

bool input_error(cx::ErrorKind k) {
  switch (k) {
    case cx::ErrorKind::Parse:
    case cx::ErrorKind::UnknownRoot:
    case cx::ErrorKind::NotInterior:
    case cx::ErrorKind::GroupTooLarge:
    case cx::ErrorKind::NonFinite:
    case cx::ErrorKind::SystemMismatch:
    case cx::ErrorKind::NotSortable:
    case cx::ErrorKind::DimensionMismatch:
    case cx::ErrorKind::NotCrystallographic:
    case cx::ErrorKind::BasePointNotInLattice:
      return true;
    default:
      return false;
  }
}

// Everything a subcommand may need, built lazily in dependency order.
class Session {
 public:
  explicit Session(const JobSpec& job) : job_(job) {
    Timer t("root system");
    sys_ = cx::CoxeterSystem::build(parse_system(job.system));
    log(2, "system " + sys_->label() + " over " + sys_->field().generator_name());
  }

  const cx::CoxeterSystem& sys() const { return *sys_; }
  const JobSpec& job() const { return job_; }

  const cx::Group& group() {
    if (!group_) {
      Timer t("group enumeration");
      group_ = std::make_unique<cx::Group>(sys_, job_.max_order);
    }
    return *group_;
  }
  const cx::CoxeterFan& coxeter_fan() {
    if (!cfan_) cfan_ = std::make_unique<cx::CoxeterFan>(group());
    return *cfan_;
  }
  cx::CoxeterElement c() const {
    return job_.c.empty() ? cx::CoxeterElement::standard(*sys_) : cx::CoxeterElement::parse(*sys_, job_.c);
  }
  const cx::Cambrian& cambrian() {
    if (!cam_) {
      Timer t("sortable data");
      cam_ = std::make_unique<cx::Cambrian>(group(), c());
    }
    return *cam_;
  }
  const cx::CambrianFan& fan() {
    if (!fan_) fan_ = std::make_unique<cx::CambrianFan>(coxeter_fan(), cambrian());
    return *fan_;
  }
  const cx::BasePoint& base_point() {
    if (!a_) a_ = std::make_unique<cx::BasePoint>(parse_base_point(*sys_, job_.base_point));
    return *a_;
  }
  const cx::Polytope& perm() {
    if (!perm_) {
      perm_ = std::make_unique<cx::Polytope>(cx::permutahedron(coxeter_fan(), base_point()));
      cx::mark_admissible(*perm_, cambrian());
    }
    return *perm_;
  }
  const cx::Polytope& ass() {
    if (!ass_) {
      Timer t("associahedron");
      ass_ = std::make_unique<cx::Polytope>(cx::associahedron(fan(), base_point()));
    }
    return *ass_;
  }
  std::string word(std::size_t w) { return cx::word_to_string(*sys_, group()[w].reduced_word()); }

 private:
  JobSpec job_;
  cx::SystemPtr sys_;
  std::unique_ptr<cx::Group> group_;
  std::unique_ptr<cx::CoxeterFan> cfan_;
  std::unique_ptr<cx::Cambrian> cam_;
  std::unique_ptr<cx::CambrianFan> fan_;
  std::unique_ptr<cx::BasePoint> a_;
  std::unique_ptr<cx::Polytope> perm_, ass_;
};

std::vector<std::size_t> sorted(Session& s, std::vector<std::size_t> idx) {
  cx::canonical_sort(s.group(), idx);
  return idx;
}

void emit(Session& s, const cx::Polytope& p, bool is_ass) {
  const std::string& fmt = s.job().export_format;
  if (fmt.empty()) return;
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!s.job().out.empty()) {
    file.open(s.job().out);
    if (!file) throw cx::Error(cx::ErrorKind::Parse, "cannot write " + s.job().out);
    os = &file;
  }
  if (fmt == "json") {
    const cx::CoxeterElement c = s.c();
    cx::ExportContext ctx{&s.group(), &s.base_point(), is_ass ? &c : nullptr,
                          is_ass ? "associahedron" : "permutahedron"};
    cx::Json j = cx::polytope_json(p, ctx);
    if (is_ass) j["clusters"] = cx::clusters_json(cx::ClusterComplex(p, s.fan()), s.group());
    *os << j.dump(2) << '\n';
  } else if (fmt == "off") {
    if (s.sys().rank() != 3) throw cx::Error(cx::ErrorKind::DimensionMismatch, "OFF export needs rank 3");
    cx::write_off(*os, p);
  } else {
    throw cx::Error(cx::ErrorKind::Parse, "unknown export format '" + fmt + "'");
  }
}

std::string field_description(const cx::CoxeterSystem& sys) {
  const auto& f = sys.field();
  if (f.is_rational()) return "Q";
  return "Q(z), z = " + f.generator_name() + ", minimal polynomial " + f.minimal_polynomial_string();
}

int cmd_group(Session& s) {
  const auto& g = s.group();
  std::cout << "system " << s.sys().label() << "\n"
            << "rank " << s.sys().rank() << "\n"
            << "field " << field_description(s.sys()) << "\n"
            << "order " << g.size() << "\n"
            << "positive roots " << s.sys().num_positive() << "\n"
            << "longest element " << s.word(g.longest_index()) << " (length " << g.longest().length() << ")\n";
  return 0;
}

int cmd_sortables(Session& s) {
  const auto& cam = s.cambrian();
  const auto list = sorted(s, cam.sortables());
  std::cout << list.size() << " " << cam.c().to_string(s.sys()) << "-sortable elements\n";
  for (std::size_t w : list) std::cout << s.word(w) << "  " << cam.label(w) << "\n";
  return 0;
}

int cmd_singletons(Session& s) {
  const auto& cam = s.cambrian();
  const auto& d = cam.singleton_diff();
  auto show = [&](const char* name, const std::vector<std::size_t>& v) {
    std::cout << name << " (" << v.size() << "):";
    for (std::size_t w : sorted(s, v)) std::cout << ' ' << s.word(w);
    std::cout << "\n";
  };
  show("fibre", d.via_covers);
  show("sortable and antisortable", d.via_antisortable);
  show("prefix of w0 sorting word", d.via_prefixes);
  std::vector<std::size_t> diff;
  std::set<std::size_t> all(d.via_covers.begin(), d.via_covers.end());
  all.insert(d.via_antisortable.begin(), d.via_antisortable.end());
  all.insert(d.via_prefixes.begin(), d.via_prefixes.end());
  for (std::size_t w : all) {
    auto in = [w](const std::vector<std::size_t>& v) { return std::binary_search(v.begin(), v.end(), w); };
    if (!(in(d.via_covers) && in(d.via_antisortable) && in(d.via_prefixes))) diff.push_back(w);
  }
  if (diff.empty()) {
    std::cout << "diff: none\n";
  } else {
    show("diff", diff);
  }
  return d.agree() ? 0 : 1;
}

void print_hv(const cx::HVReport& r) {
  std::cout << "H/V consistency " << (r.ok() ? "ok" : "FAILED") << " (violations " << r.violated_inequalities
            << ", wrong tight counts " << r.wrong_tight_count << ", redundant " << r.redundant_halfspaces
            << ", connected " << (r.connected ? "yes" : "no") << ")\n";
}

int cmd_perm(Session& s) {
  const auto& p = s.perm();
  const auto hv = cx::hv_consistency(p);
  if (!s.job().export_format.empty()) {
    emit(s, p, false);
    return hv.ok() ? 0 : 1;
  }
  std::size_t admissible = 0;
  for (const auto& h : p.halfspaces()) admissible += h.admissible;
  std::cout << "permutahedron of " << s.sys().label() << " at a = " << cx::to_string(s.base_point().point()) << "\n"
            << p.vertices().size() << " vertices, " << p.halfspaces().size() << " half spaces ("
            << admissible << " " << s.cambrian().c().to_string(s.sys()) << "-admissible)\n";
  print_hv(hv);
  std::vector<std::size_t> order(p.vertices().size());
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t v : order) std::cout << "M(" << s.word(p.vertices()[v].element) << ") = " << cx::to_string(p.vertices()[v].point) << "\n";
  return hv.ok() ? 0 : 1;
}

int cmd_asso(Session& s) {
  const auto& p = s.ass();
  const auto hv = cx::hv_consistency(p);
  if (!s.job().export_format.empty()) {
    emit(s, p, true);
    return hv.ok() ? 0 : 1;
  }
  const auto& cam = s.cambrian();
  std::cout << "associahedron of " << s.sys().label() << " for c = " << cam.c().to_string(s.sys())
            << " at a = " << cx::to_string(s.base_point().point()) << "\n"
            << p.vertices().size() << " vertices, " << p.halfspaces().size() << " facets\n";
  print_hv(hv);
  for (const auto& v : p.vertices()) {
    std::cout << "x(C(" << s.word(v.element) << ")) = " << cx::to_string(v.point)
              << (cam.is_singleton(v.element) ? "  [common with Perm]" : "") << "\n";
  }
  return hv.ok() ? 0 : 1;
}

int cmd_fan(Session& s) {
  const auto& f = s.fan();
  const auto& sys = s.sys();
  std::cout << f.num_rays() << " rays, " << f.cones().size() << " maximal cones, " << f.adjacencies().size()
            << " adjacent pairs\n";
  for (std::size_t k = 0; k < f.num_rays(); ++k)
    std::cout << "ray " << cx::ap_root_to_string(sys, f.label(k)) << " = " << cx::to_string(f.ray(k)) << " (orbit "
              << sys.name(f.orbit(k)) << ")\n";
  std::vector<std::size_t> cones(f.cones().size());
  std::iota(cones.begin(), cones.end(), 0);
  for (std::size_t i : cones) {
    const auto& cone = f.cones()[i];
    std::cout << "cone " << s.word(cone.sortable) << ": {";
    for (std::size_t j = 0; j < cone.labels.size(); ++j)
      std::cout << (j ? ", " : "") << cx::ap_root_to_string(sys, cone.labels[j]);
    std::cout << "}, " << cone.chambers.size() << " chambers\n";
  }
  return 0;
}

int cmd_clusters(Session& s) {
  const cx::ClusterComplex cc(s.ass(), s.fan());
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < cc.facets().size(); ++i) order.push_back(cc.facet_sortable(i));
  order = sorted(s, order);
  for (std::size_t w : order) std::cout << s.word(w) << ": " << cc.to_string(cc.facets()[*cc.facet_of_sortable(w)]) << "\n";
  std::cout << "f-vector:";
  for (std::size_t x : cc.f_vector()) std::cout << ' ' << x;
  std::cout << "\nflag: " << (cc.is_flag() ? "yes" : "no") << "\n";
  return cc.facets().size() == s.cambrian().sortables().size() ? 0 : 1;
}

int cmd_compat(Session& s) {
  std::vector<cx::ApRoot> roots;
  for (const auto& arg : s.job().roots) {
    std::stringstream ss(arg);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) roots.push_back(cx::parse_ap_root(s.sys(), item));
  }
  const cx::ClusterComplex cc(s.ass(), s.fan());
  const bool a = cc.is_compatible(roots), b = cc.is_compatible_by_intersection(roots);
  std::vector<cx::ApRoot> norm = roots;
  std::sort(norm.begin(), norm.end());
  norm.erase(std::unique(norm.begin(), norm.end()), norm.end());
  std::cout << cc.to_string(norm) << " is " << (a ? "" : "not ") << s.cambrian().c().to_string(s.sys())
            << "-compatible\n";
  return a == b ? 0 : 1;
}

int cmd_barycentre(Session& s) {
  const cx::Vector bp = cx::barycentre(s.perm()), ba = cx::barycentre(s.ass());
  std::cout << "Perm barycentre " << cx::to_string(bp) << "\nAss barycentre  " << cx::to_string(ba) << "\n"
            << (bp == ba ? "coincide" : "DIFFER") << "\n";
  return bp == ba ? 0 : 1;
}

void print_report(const cx::VerifyReport& r, bool& ok) {
  for (const auto& c : r.checks) {
    std::cout << (c.passed ? "PASS " : "FAIL ") << r.system << " c=" << r.coxeter_element << " " << c.name;
    if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
    std::cout << "\n";
    ok = ok && c.passed;
  }
}

void line(bool passed, const std::string& text, bool& ok) {
  std::cout << (passed ? "PASS " : "FAIL ") << text << "\n";
  ok = ok && passed;
}

int cmd_verify(Session& s) {
  const auto& sys = s.sys();
  std::vector<cx::CoxeterElement> cs;
  if (s.job().c.empty()) {
    cs = cx::all_coxeter_elements(sys);
  } else {
    cs.push_back(s.c());
  }
  bool ok = true;
  for (const auto& c : cs) print_report(cx::verify_cambrian(s.group(), s.coxeter_fan(), c, s.base_point()), ok);

  const std::string& label = sys.label();
  const bool base_default = s.job().base_point.empty();
  if (label.rfind("I2(", 0) == 0 && base_default) {
    const auto r = cx::dihedral_check(static_cast<unsigned>(std::stoul(label.substr(3))));
    std::ostringstream os;
    os << "dihedral extra vertex |delta| = " << r.delta;
    line(r.delta < 1e-12 && r.exact_match, label + " " + os.str(), ok);
    line(r.identification_error < 1e-12, label + " model identification of all vertices", ok);
    line(r.non_singleton_sum_is_p || (r.non_singletons == 0 && r.ass_equals_perm),
         label + " non-singleton vertex sum equals the extra vertex", ok);
  } else if (label.size() >= 2 && label[0] == 'A' && base_default && sys.rank() <= 5) {
    const auto r = cx::type_a_check(sys.rank() + 1);
    line(r.isometric && r.weights_match && r.base_point_matches && r.vertices_are_inverse_permutations &&
             r.vertex_set_is_all_permutations,
         label + " permutation coordinates", ok);
  } else if (label.size() >= 2 && label[0] == 'B' && sys.rank() <= 3) {
    for (const auto& c : cs) {
      const auto r = cx::type_b_check(sys.rank(), c.word());
      line(r.isometric && r.base_point_matches && r.perm_equal && r.ass_equal,
           label + " c=" + c.to_string(sys) + " equals symmetric type A cut", ok);
    }
  }
  std::cout << (ok ? "all checks passed" : "verification FAILED") << "\n";
  return ok ? 0 : 1;
}

int cmd_export(Session& s) {
  JobSpec job = s.job();
  if (job.export_format.empty()) job.export_format = "json";
  Session t(job);
  if (job.polytope == "perm") {
    emit(t, t.perm(), false);
  } else if (job.polytope == "asso") {
    emit(t, t.ass(), true);
  } else {
    throw cx::Error(cx::ErrorKind::Parse, "unknown polytope '" + job.polytope + "'");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cambrian lattices, Cambrian fans and generalized associahedra of finite Coxeter groups"};
  app.require_subcommand(1);
  JobSpec job;

  struct Cmd {
    const char* name;
    const char* help;
    int (*run)(Session&);
  };
  const std::vector<Cmd> cmds = {
      {"group", "order, number of positive roots and longest element", cmd_group},
      {"sortables", "c-sortable elements with their c-sorting factorizations", cmd_sortables},
      {"singletons", "c-singletons by three independent algorithms", cmd_singletons},
      {"perm", "the permutahedron", cmd_perm},
      {"asso", "the c-generalized associahedron", cmd_asso},
      {"fan", "rays and maximal cones of the c-Cambrian fan", cmd_fan},
      {"clusters", "the c-cluster complex", cmd_clusters},
      {"compat", "test a set of almost positive roots for c-compatibility", cmd_compat},
      {"barycentre", "vertex barycentres of Perm and Ass", cmd_barycentre},
      {"verify", "run the full check suite", cmd_verify},
      {"export", "write Perm or Ass as JSON or OFF", cmd_export},
  };
  std::vector<std::pair<CLI::App*, const Cmd*>> subs;
  for (const auto& c : cmds) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("system", job.system, "Coxeter type (A3, B3, H3, I2(7), ...), JSON matrix, or .json file")
        ->required();
    sub->add_option("--c", job.c, "Coxeter element, e.g. s2,s1,s3 (default s1,...,sn)");
    sub->add_option("--base-point", job.base_point, "weight coefficients a1,a2,... (rationals, default all 1)");
    sub->add_option("--max-order", job.max_order, "refuse groups larger than this")->capture_default_str();
    sub->add_option("--out", job.out, "output file for exports (default stdout)");
    if (std::string(c.name) == "export") {
      sub->add_option("--format", job.export_format, "json or off")->check(CLI::IsMember({"json", "off"}));
      sub->add_option("--polytope", job.polytope, "perm or asso")->check(CLI::IsMember({"perm", "asso"}))->capture_default_str();
    } else if (std::string(c.name) == "perm" || std::string(c.name) == "asso") {
      sub->add_option("--export", job.export_format, "json or off")->check(CLI::IsMember({"json", "off"}));
    }
    if (std::string(c.name) == "compat")
      sub->add_option("roots", job.roots, "roots such as a1+a2 or -a1 (use -- before negative roots)");
    subs.emplace_back(sub, &c);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Session session(job);
    for (auto& [sub, cmd] : subs)
      if (sub->parsed()) {
        Timer t(cmd->name);
        return cmd->run(session);
      }
  } catch (const cx::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return input_error(e.kind()) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
