// omegalie: command-line front end.
//
// Exit codes: 0 success, 1 parse or validation error, 2 a verification
// check failed, 3 an extension is needed and --allow-extension was not given.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "omegalie/omegalie.hpp"

using namespace omegalie;
using ordered_json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kInput = 1, kCheckFailed = 2, kNeedsExtension = 3 };

struct Options {
  bool machine = false;
  std::string field = "Q";
  bool field_given = false;
};

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  require(bool(in), ErrorKind::ParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

OmegaAlgebra load_algebra(const std::string& path, const Options& opt) {
  OmegaAlgebra alg = read_algebra(slurp(path));
  if (opt.field_given) alg = alg.embedded(parse_field(opt.field));
  return alg;
}

void print_matrix(const std::string& name, const Matrix& m) {
  std::cout << name << ":\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::cout << "  [";
    for (std::size_t j = 0; j < m.cols(); ++j) std::cout << (j ? ", " : "") << m(i, j).to_string();
    std::cout << "]\n";
  }
}

ordered_json report_json(const ReportRow& r, const std::string& section, const std::string& field) {
  ordered_json j;
  j["section"] = section;
  j["field"] = field;
  j["id"] = r.id;
  j["status"] = to_string(r.status);
  j["ms"] = r.ms;
  j["detail"] = r.detail;
  return j;
}

int cmd_check(const std::string& path, const Options& opt) {
  OmegaAlgebra alg = load_algebra(path, opt);
  ValidationReport rep = validate(alg);
  std::optional<SkewForm> rec;
  bool recovered = false;
  if (alg.dim() >= 3) {
    rec = recover_omega(alg.sc);
    recovered = rec && *rec == alg.omega;
  }
  bool ok = rep.ok() && (alg.dim() < 3 || recovered);
  if (opt.machine) {
    ordered_json j;
    j["valid"] = rep.ok();
    j["report"] = rep.to_string();
    j["recovered_omega"] = rec ? ordered_json(rec->matrix().to_strings()) : ordered_json(nullptr);
    j["omega_matches"] = recovered;
    j["lie"] = alg.omega.is_zero();
    std::cout << j.dump() << "\n";
  } else {
    std::cout << (rep.ok() ? "valid" : "invalid") << "\n";
    if (!rep.ok()) std::cout << rep.to_string();
    if (alg.dim() >= 3) {
      if (rec)
        print_matrix("recovered omega", rec->matrix());
      else
        std::cout << "no omega makes these brackets an omega-Lie algebra\n";
      std::cout << "given omega " << (recovered ? "matches" : "does not match") << "\n";
    }
    std::cout << (alg.omega.is_zero() ? "Lie algebra" : "non-Lie") << "\n";
  }
  return ok ? kOk : kInput;
}

int cmd_classify(const std::string& path, bool allow_ext, bool strict, const Options& opt) {
  OmegaAlgebra alg = load_algebra(path, opt);
  ClassificationResult r = classify(alg, allow_ext, strict);
  if (opt.machine) {
    std::cout << result_to_json(r).dump() << "\n";
    return kOk;
  }
  std::cout << r.label.to_string() << "\n";
  std::cout << "field: " << r.field()->to_string() << "\n";
  if (r.extension) std::cout << "extension: " << r.extension->to_string() << "\n";
  print_matrix(r.witness.is_identity() ? "witness (identity)" : "witness", r.witness);
  std::cout << "trace:\n";
  for (const auto& s : r.trace) {
    std::cout << "  " << s.tag;
    if (!s.g.is_identity()) std::cout << "  " << s.g.to_string();
    std::cout << "\n";
  }
  return kOk;
}

int cmd_iso(const std::string& p1, const std::string& p2, bool allow_ext, const Options& opt) {
  OmegaAlgebra a = load_algebra(p1, opt), b = load_algebra(p2, opt);
  IsoResult r = iso_witness(a, b, allow_ext);
  if (opt.machine) {
    ordered_json j;
    j["isomorphic"] = r.isomorphic;
    j["witness"] = r.witness ? ordered_json(r.witness->to_strings()) : ordered_json(nullptr);
    j["c_pair_bridge"] = r.used_c_pair_bridge;
    j["reason"] = r.reason;
    std::cout << j.dump() << "\n";
    return kOk;
  }
  std::cout << (r.isomorphic ? "isomorphic" : "NonIsomorphic") << " (" << r.reason << ")\n";
  if (r.witness) print_matrix("witness", *r.witness);
  if (r.used_c_pair_bridge) std::cout << "uses x -> y, y -> -x, z -> z between the two members of a C pair\n";
  return kOk;
}

int cmd_canonical(const std::string& label, const std::string& alpha, bool strict, const Options& opt) {
  FieldPtr f = parse_field(opt.field);
  std::string text = label;
  if (label == "C") {
    require(!alpha.empty(), ErrorKind::InvalidAlpha, "C needs --alpha");
    text = "C:" + alpha;
  }
  CanonicalLabel l = parse_label(text, f);
  if (l.kind == CanonicalLabel::Kind::C && !strict) {
    FieldElement rep = c_pair_representative(l.alpha);
    if (!(rep == l.alpha)) std::cerr << "note: C:" << l.alpha.to_string() << " written as C:" << rep.to_string() << "\n";
    l.alpha = rep;
  }
  OmegaAlgebra alg = canonical_algebra(l, f);
  std::cout << (opt.machine ? algebra_to_json(alg).dump() + "\n" : write_algebra(alg));
  return kOk;
}

int cmd_omega_reduce(const std::string& path, const Options& opt) {
  OmegaAlgebra alg = load_algebra(path, opt);
  CongruenceResult c = skew_congruence_reduce(alg.omega);
  if (opt.machine) {
    ordered_json j;
    j["rank"] = c.rank;
    j["q"] = c.q.to_strings();
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "rank: " << c.rank << "\n";
    print_matrix("Q", c.q);
    print_matrix("Q^t A Q", c.q.transpose() * alg.omega.matrix() * c.q);
  }
  return kOk;
}

int cmd_variety(std::size_t n, const Options& opt) {
  FieldPtr f = parse_field(opt.field);
  VarietyIdeal vi = defining_ideal(n, SkewForm(canonical_skew(n, 2, f)), f);
  std::vector<Polynomial> gb;
  std::optional<std::size_t> dim;
  if (n == 3) {
    Ideal ideal = vi.ideal();
    gb = ideal.groebner();
    dim = quotient_dimension(ideal);
  }
  if (opt.machine) {
    ordered_json j;
    j["vars"] = vi.ring->vars();
    ordered_json gens = ordered_json::array();
    for (std::size_t i = 0; i < vi.generators.size(); ++i)
      gens.push_back({{"poly", vi.generators[i].to_string()},
                      {"triple", {vi.trace[i].i, vi.trace[i].j, vi.trace[i].k}},
                      {"component", vi.trace[i].component}});
    j["generators"] = gens;
    ordered_json g = ordered_json::array();
    for (const auto& p : gb) g.push_back(p.to_string());
    j["groebner"] = g;
    j["dimension"] = dim ? ordered_json(*dim) : ordered_json(nullptr);
    std::cout << j.dump() << "\n";
    return kOk;
  }
  std::cout << "generators:\n";
  for (std::size_t i = 0; i < vi.generators.size(); ++i)
    std::cout << "  " << vi.generators[i] << "    (e" << vi.trace[i].i << ", e" << vi.trace[i].j << ", e"
              << vi.trace[i].k << "), component " << vi.trace[i].component << "\n";
  if (n == 3) {
    std::cout << "reduced groebner basis:\n";
    for (const auto& p : gb) std::cout << "  " << p << "\n";
    std::cout << "dimension: " << *dim << "\n";
  } else {
    std::cout << "groebner basis and dimension are computed for n = 3 only\n";
  }
  return kOk;
}

int cmd_gb(const std::string& path, const Options& opt) {
  IdealFile in = read_ideal(slurp(path));
  Ideal ideal(in.ring, in.polys);
  const auto& gb = ideal.groebner();
  std::optional<std::size_t> dim;
  if (!ideal.is_unit()) dim = quotient_dimension(ideal);
  if (opt.machine) {
    ordered_json j;
    ordered_json g = ordered_json::array();
    for (const auto& p : gb) g.push_back(p.to_string());
    j["groebner"] = g;
    j["dimension"] = dim ? ordered_json(*dim) : ordered_json(nullptr);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << write_ideal(in.ring, gb);
    std::cout << "# dimension: " << (dim ? std::to_string(*dim) : std::string("unit ideal")) << "\n";
  }
  return kOk;
}

int cmd_verify(const std::string& section, const Options& opt) {
  std::vector<FieldPtr> fields;
  if (opt.field_given)
    fields.push_back(parse_field(opt.field));
  else
    fields = {Field::rationals(), Field::prime(101)};
  bool ok = true;
  auto emit = [&](const std::string& name, const FieldPtr& f, const ReportTable& t) {
    ok = ok && t.ok();
    if (opt.machine) {
      for (const auto& r : t.rows()) std::cout << report_json(r, name, f->to_string()).dump() << "\n";
      return;
    }
    std::cout << "== section " << name << " over " << f->to_string() << "\n" << t.to_string();
  };
  for (const auto& f : fields) {
    if (section == "3" || section == "all") emit("3", f, verify_section3(f));
    if (section == "4" || section == "all") emit("4", f, verify_section4(f));
    if (section == "5" || section == "all") emit("5", f, verify_example51(f));
  }
  return ok ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"omega-Lie algebras: validation, classification and ideal computations"};
  app.require_subcommand(1);
  Options opt;
  std::string format = "human";
  app.add_option("--format", format, "human or machine")->check(CLI::IsMember({"human", "machine"}));
  auto* field_opt = app.add_option("--field", opt.field, "Q, Fp:<p>, or an extension descriptor");

  std::string path, path2, label, alpha, section = "all";
  bool allow_ext = false, strict = false;
  std::size_t dim = 3;

  auto* check = app.add_subcommand("check", "validate an algebra and recover omega");
  check->add_option("alg", path)->required();

  auto* cls = app.add_subcommand("classify", "classify a 3-dimensional non-Lie algebra");
  cls->add_option("alg", path)->required();
  cls->add_flag("--allow-extension", allow_ext);
  cls->add_flag("--strict-c-labels", strict);

  auto* iso = app.add_subcommand("iso", "isomorphism test with witness");
  iso->add_option("alg1", path)->required();
  iso->add_option("alg2", path2)->required();
  iso->add_flag("--allow-extension", allow_ext);

  auto* canon = app.add_subcommand("canonical", "emit a canonical algebra");
  canon->add_option("label", label)->required();
  canon->add_option("--alpha", alpha);
  canon->add_flag("--strict-c-labels", strict);

  auto* reduce = app.add_subcommand("omega-reduce", "congruence normal form of omega");
  reduce->add_option("alg", path)->required();

  auto* var = app.add_subcommand("variety", "defining ideal of the variety");
  var->add_option("--dim", dim)->check(CLI::Range(3, 4));

  auto* gb = app.add_subcommand("gb", "reduced Groebner basis of an ideal file");
  gb->add_option("ideal", path)->required();

  auto* verify = app.add_subcommand("verify-paper", "run the verification tables");
  verify->add_option("--section", section)->check(CLI::IsMember({"3", "4", "5", "all"}));

  for (auto* sub : {check, cls, iso, canon, reduce, var, gb, verify}) {
    sub->add_option("--format", format)->check(CLI::IsMember({"human", "machine"}));
    sub->add_option("--field", opt.field);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }
  opt.machine = format == "machine";
  opt.field_given = field_opt->count() > 0;
  for (auto* sub : app.get_subcommands())
    if (sub->get_option("--field")->count() > 0) opt.field_given = true;

  try {
    if (*check) return cmd_check(path, opt);
    if (*cls) return cmd_classify(path, allow_ext, strict, opt);
    if (*iso) return cmd_iso(path, path2, allow_ext, opt);
    if (*canon) return cmd_canonical(label, alpha, strict, opt);
    if (*reduce) return cmd_omega_reduce(path, opt);
    if (*var) return cmd_variety(dim, opt);
    if (*gb) return cmd_gb(path, opt);
    if (*verify) return cmd_verify(section, opt);
  } catch (const ExtensionRequired& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNeedsExtension;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
  return kInput;
}
