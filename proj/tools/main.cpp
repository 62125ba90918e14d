#include "hallprim/acceptance.hpp"
#include "hallprim/cyclic_hall.hpp"
#include "hallprim/hall_jordan.hpp"
#include "hallprim/hall_littlewood.hpp"
#include "hallprim/serialize.hpp"
#include "hallprim/symfunc.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>
#include <stdexcept>

using namespace hallprim;
using nlohmann::json;

namespace {

constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitComputation = 3;

/// Everything a subcommand reports; printed as text, LaTeX or JSON.
struct Output {
  int m = 1;
  std::string substitution = "t -> q^{-1}";
  std::string sign = "(-q^{-1})^{rm}";
  std::vector<std::string> lines;
  std::string latex;
  json payload;
  std::vector<std::string> warnings;
  bool verified = true;
};

struct Flags {
  bool json = false;
  bool latex = false;
};

std::string substitution_for(int m) { return "t -> q^{-" + std::to_string(m) + "}"; }

Partition parse_partition(const std::string& s) { return Partition::parse(s); }

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t pos = 0;
      out.push_back(std::stoi(tok, &pos));
      if (pos != tok.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw std::invalid_argument("'" + s + "' is not a comma-separated list of integers, e.g. 2,3");
    }
  }
  return out;
}

ZSign parse_sign(const std::string& s) {
  if (s == "vertex") return ZSign::vertex_power;
  if (s == "degree") return ZSign::degree_sign;
  throw std::invalid_argument("--sign must be 'vertex' or 'degree'");
}

void emit(const std::string& command, const Output& out, const Flags& flags) {
  if (flags.json) {
    json env = {{"command", command},
                {"conventions", {{"m", out.m}, {"substitution", out.substitution}, {"z_prefactor", out.sign}}},
                {"result", out.payload},
                {"warnings", out.warnings}};
    std::cout << env.dump(2) << "\n";
    return;
  }
  std::cout << "# command: " << command << "\n";
  std::cout << "# conventions: m=" << out.m << ", " << out.substitution << ", z_r prefactor " << out.sign << "\n";
  for (const auto& w : out.warnings) std::cout << "# warning: " << w << "\n";
  if (flags.latex && !out.latex.empty()) {
    std::cout << out.latex << "\n";
  } else {
    for (const auto& l : out.lines) std::cout << l << "\n";
  }
}

Output symfunc_output(const SymFunc& x) {
  Output o;
  o.lines = {to_string(x)};
  o.latex = to_latex(x);
  o.payload = to_json(x);
  return o;
}

Output hall_output(const HallElem& x) {
  Output o;
  o.lines = {to_string(x)};
  o.latex = to_latex(x);
  o.payload = to_json(x);
  return o;
}

Output num_output(const NumHallElem& x) {
  Output o;
  o.m = x.vertices();
  o.substitution = substitution_for(x.vertices());
  o.lines = {to_string(x)};
  o.latex = to_latex(x);
  o.payload = to_json(x);
  return o;
}

std::string verdict(bool ok) { return ok ? "true" : "false"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Hall-algebra and symmetric-function computations"};
  app.require_subcommand(1);
  Flags flags;
  app.add_flag("--json", flags.json, "print a JSON envelope");
  app.add_flag("--latex", flags.latex, "print the result as LaTeX");
  app.fallthrough();

  std::function<Output()> action;

  // symf
  auto* symf = app.add_subcommand("symf", "symmetric functions over Q(t)");
  symf->require_subcommand(1);
  int sym_n = 0;
  std::string via = "partitions", sym_part;
  auto* c_in_p_cmd = symf->add_subcommand("c-in-p", "c_n in the power-sum basis");
  c_in_p_cmd->add_option("N", sym_n)->required()->check(CLI::NonNegativeNumber);
  c_in_p_cmd->callback([&] { action = [&] { return symfunc_output(c_in_p(sym_n)); }; });

  auto* p_from_c_cmd = symf->add_subcommand("p-from-c", "p_n in the c-basis");
  p_from_c_cmd->add_option("N", sym_n)->required()->check(CLI::PositiveNumber);
  p_from_c_cmd->add_option("--via", via, "partitions | compositions | collected")
      ->check(CLI::IsMember({"partitions", "compositions", "collected"}));
  p_from_c_cmd->callback([&] {
    action = [&] {
      CExpr x = via == "partitions" ? p_from_c_closed(sym_n)
                : via == "compositions" ? p_from_c_compositions(sym_n)
                                        : p_from_c_collected(sym_n);
      Output o;
      o.lines = {to_string(x)};
      o.latex = to_latex(x);
      o.payload = to_json(x);
      if (sym_n == 3) o.warnings.push_back(worked_p3_warning());
      return o;
    };
  });

  auto* hl_cmd = symf->add_subcommand("hl-P", "Hall-Littlewood P_lambda in the power-sum basis");
  hl_cmd->add_option("partition", sym_part)->required();
  hl_cmd->callback([&] { action = [&] { return symfunc_output(hall_littlewood_P(parse_partition(sym_part))); }; });

  auto* mac_cmd = symf->add_subcommand("macdonald", "sum_lambda t^{n(lambda)} prod (1-t^{-i}) P_lambda");
  mac_cmd->add_option("N", sym_n)->required()->check(CLI::PositiveNumber);
  mac_cmd->callback([&] { action = [&] { return symfunc_output(macdonald_primitive(sym_n)); }; });

  // hall
  auto* hall = app.add_subcommand("hall", "Hall algebra of the Jordan quiver over Q(q)");
  hall->require_subcommand(1);
  std::string pa, pb, pc, method = "center";
  int hall_n = 0;
  auto* mul_cmd = hall->add_subcommand("mul", "[I_lambda][I_mu]");
  mul_cmd->add_option("lambda", pa)->required();
  mul_cmd->add_option("mu", pb)->required();
  mul_cmd->callback([&] {
    action = [&] { return hall_output(iso_class(parse_partition(pa)) * iso_class(parse_partition(pb))); };
  });

  auto* cop_cmd = hall->add_subcommand("coproduct", "Green's coproduct of [I_lambda]");
  cop_cmd->add_option("lambda", pa)->required();
  cop_cmd->callback([&] {
    action = [&] {
      HallTensor t = coproduct(iso_class(parse_partition(pa)));
      Output o;
      o.lines = {to_string(t)};
      o.payload = to_json(t);
      return o;
    };
  });

  auto* poly_cmd = hall->add_subcommand("polynomial", "Hall polynomial g^lambda_{mu nu}(q)");
  poly_cmd->add_option("mu", pa)->required();
  poly_cmd->add_option("nu", pb)->required();
  poly_cmd->add_option("lambda", pc)->required();
  poly_cmd->callback([&] {
    action = [&] {
      RatFunc g = hall_polynomial(parse_partition(pa), parse_partition(pb), parse_partition(pc));
      Output o;
      o.lines = {g.to_string()};
      o.latex = g.to_latex();
      o.payload = g.to_string();
      return o;
    };
  });

  auto* prim_cmd = hall->add_subcommand("primitive", "primitive element p_n");
  prim_cmd->add_option("N", hall_n)->required()->check(CLI::PositiveNumber);
  prim_cmd->add_option("--method", method, "center | macdonald")->check(CLI::IsMember({"center", "macdonald"}));
  prim_cmd->callback([&] {
    action = [&] {
      Output o = hall_output(method == "center" ? primitive_center(hall_n) : primitive_macdonald_image(hall_n));
      if (hall_n == 3) o.warnings.push_back(worked_p3_warning());
      return o;
    };
  });

  auto* vprim_cmd = hall->add_subcommand("verify-primitive", "check both formulas for p_n are primitive and agree");
  vprim_cmd->add_option("N", hall_n)->required()->check(CLI::PositiveNumber);
  vprim_cmd->callback([&] {
    action = [&] {
      HallElem a = primitive_center(hall_n), b = primitive_macdonald_image(hall_n);
      bool pa_ok = is_primitive(a), pb_ok = is_primitive(b), agree = a == b;
      Output o;
      o.lines = {"center: " + to_string(a), "macdonald: " + to_string(b), "center primitive: " + verdict(pa_ok),
                 "macdonald primitive: " + verdict(pb_ok), "methods agree: " + verdict(agree)};
      o.payload = {{"center", to_json(a)}, {"macdonald", to_json(b)}, {"center_primitive", pa_ok},
                   {"macdonald_primitive", pb_ok}, {"agree", agree}};
      o.verified = pa_ok && pb_ok && agree;
      if (hall_n == 3) {
        auto rep = worked_p3_report();
        o.warnings.push_back(worked_p3_warning());
        o.lines.push_back("with coefficient 1 on z_1^3: " + to_string(rep.unit_z1_cubed) +
                          " (primitive: " + verdict(rep.unit_z1_cubed_primitive) + ")");
      }
      return o;
    };
  });

  auto* id_cmd = hall->add_subcommand("identity", "Hall-number identity for lambda |- n");
  id_cmd->add_option("N", hall_n)->required()->check(CLI::PositiveNumber);
  id_cmd->add_option("lambda", pa)->required();
  id_cmd->callback([&] {
    action = [&] {
      auto r = verify_hall_identity(hall_n, parse_partition(pa));
      Output o;
      o.lines = {"lhs: " + r.lhs.to_string(), "rhs: " + r.rhs.to_string(), "holds: " + verdict(r.holds)};
      o.payload = {{"lhs", r.lhs.to_string()}, {"rhs", r.rhs.to_string()}, {"holds", r.holds}};
      o.verified = r.holds;
      return o;
    };
  });

  // fq
  auto* fq = app.add_subcommand("fq", "brute-force oracle over F_q for cyclic quivers");
  fq->require_subcommand(1);
  int fm = 1, fq_q = 2, fr = 1, fn = 1, dim_cap = 4, max_weight = 5;
  std::string dimvec, rs, subs, quots, qs = "2,3", sign = "vertex";

  auto* enum_cmd = fq->add_subcommand("enumerate", "iso classes of a given dimension");
  enum_cmd->add_option("--m", fm, "vertex count")->check(CLI::PositiveNumber);
  enum_cmd->add_option("--deg", fr, "r for dimension vector r*(1,...,1)")->check(CLI::NonNegativeNumber);
  enum_cmd->add_option("--dim", dimvec, "explicit dimension vector, e.g. 1,2");
  enum_cmd->add_option("--q", fq_q, "field size (2, 3 or 5)");
  enum_cmd->callback([&] {
    action = [&] {
      std::vector<int> d = dimvec.empty() ? std::vector<int>(fm, fr) : parse_int_list(dimvec);
      if (static_cast<int>(d.size()) != fm) throw std::invalid_argument("--dim needs one entry per vertex");
      Output o;
      o.m = fm;
      o.substitution = substitution_for(fm);
      o.payload = json::array();
      for (const auto& cls : enumerate_iso(d)) {
        int e = end_dim(cls, fq_q);
        BigInt a = aut_order_structural(cls, fq_q);
        bool sq = socle_squarefree(cls);
        o.lines.push_back(cls.to_string() + "  dim_End=" + std::to_string(e) + "  |Aut|=" + a.get_str() +
                          "  socle_squarefree=" + verdict(sq));
        o.payload.push_back({{"class", cls.summands_string()}, {"end_dim", e}, {"aut", a.get_str()}, {"socle_squarefree", sq}});
      }
      return o;
    };
  });

  auto* hn_cmd = fq->add_subcommand("hallnum", "number of submodules U of R with U ~ sub and R/U ~ quot");
  hn_cmd->add_option("--m", fm)->check(CLI::PositiveNumber);
  hn_cmd->add_option("--q", fq_q);
  hn_cmd->add_option("--R", rs)->required();
  hn_cmd->add_option("--sub", subs)->required();
  hn_cmd->add_option("--quot", quots)->required();
  hn_cmd->callback([&] {
    action = [&] {
      long c = submodule_count(CyclicIsoClass::parse(rs, fm), CyclicIsoClass::parse(subs, fm), CyclicIsoClass::parse(quots, fm), fq_q);
      Output o;
      o.m = fm;
      o.substitution = substitution_for(fm);
      o.lines = {std::to_string(c)};
      o.payload = c;
      return o;
    };
  });

  auto* z_cmd = fq->add_subcommand("z", "central generator z_r at a given q");
  z_cmd->add_option("--m", fm)->check(CLI::PositiveNumber);
  z_cmd->add_option("--r", fr)->check(CLI::PositiveNumber);
  z_cmd->add_option("--q", fq_q);
  z_cmd->add_option("--sign", sign, "vertex: (-q^{-1})^{rm}; degree: (-1)^r q^{-rm}");
  z_cmd->callback([&] {
    action = [&] {
      ZSign s = parse_sign(sign);
      Output o = num_output(z_r_numeric(fm, fr, fq_q, s));
      o.sign = to_string(s);
      if (fm == 2) o.warnings.push_back(two_vertex_z_warning());
      return o;
    };
  });

  auto* central_cmd = fq->add_subcommand("verify-central", "check z_r commutes with every class up to a dimension");
  central_cmd->add_option("--m", fm)->check(CLI::PositiveNumber);
  central_cmd->add_option("--r", fr)->check(CLI::PositiveNumber);
  central_cmd->add_option("--q", fq_q);
  central_cmd->add_option("--dim-cap", dim_cap, "largest total dimension of the test classes");
  central_cmd->add_option("--sign", sign);
  central_cmd->callback([&] {
    action = [&] {
      ZSign s = parse_sign(sign);
      NumHallElem z = z_r_numeric(fm, fr, fq_q, s);
      auto w = centrality_witness(z, dim_cap);
      Output o = num_output(z);
      o.sign = to_string(s);
      o.lines.push_back("central up to dimension " + std::to_string(dim_cap) + ": " + verdict(!w));
      if (w) o.lines.push_back("fails to commute with " + w->to_string());
      o.payload = {{"element", to_json(z)}, {"central", !w}};
      o.verified = !w;
      if (fm == 2) o.warnings.push_back(two_vertex_z_warning());
      return o;
    };
  });

  auto* fprim_cmd = fq->add_subcommand("verify-primitive", "numeric primitivity of n/(1-q^{-mn}) sum ... z_lambda");
  fprim_cmd->add_option("--m", fm)->check(CLI::PositiveNumber);
  fprim_cmd->add_option("--n", fn)->check(CLI::PositiveNumber);
  fprim_cmd->add_option("--q", fq_q);
  fprim_cmd->callback([&] {
    action = [&] {
      NumHallElem p = primitive_center_numeric(fm, fn, fq_q);
      bool ok = is_primitive_numeric(p);
      Output o = num_output(p);
      o.lines.push_back("primitive: " + verdict(ok));
      o.payload = {{"element", to_json(p)}, {"primitive", ok}};
      o.verified = ok;
      if (fm == 1 && fn == 3) o.warnings.push_back(worked_p3_warning());
      if (fm == 2) o.warnings.push_back(two_vertex_z_warning());
      return o;
    };
  });

  auto* cross_cmd = fq->add_subcommand("crosscheck", "Jordan quiver: enumeration against Hall polynomials and |Aut|");
  cross_cmd->add_option("--max-weight", max_weight)->check(CLI::Range(0, kCountDimCap));
  cross_cmd->add_option("--q", qs, "comma-separated field sizes");
  cross_cmd->callback([&] {
    action = [&] {
      auto res = jordan_crosscheck(max_weight, parse_int_list(qs));
      Output o;
      o.lines = {"compared: " + std::to_string(res.compared), "mismatches: " + std::to_string(res.mismatches.size())};
      o.lines.insert(o.lines.end(), res.mismatches.begin(), res.mismatches.end());
      o.payload = {{"compared", res.compared}, {"mismatches", res.mismatches}};
      o.verified = res.mismatches.empty();
      return o;
    };
  });

  auto* two_cmd = fq->add_subcommand("two-vertex", "z_n for the 2-cycle against its displayed formulas");
  two_cmd->add_option("--n", fn)->check(CLI::PositiveNumber);
  two_cmd->add_option("--q", fq_q);
  two_cmd->callback([&] {
    action = [&] {
      auto rep = compare_two_vertex_z(fn, fq_q);
      Output o = num_output(rep.computed);
      auto describe = [](const DisplayMatch& d) {
        return d.sign == 0 ? std::string("no match") : "match with global sign " + std::to_string(d.sign);
      };
      o.lines.push_back("defining sum, prefactor (-1)^n q^{-2n}: " + describe(rep.defining));
      o.lines.push_back("case-split closed form: " + describe(rep.closed_form));
      for (const auto& d : rep.closed_form.differences) o.lines.push_back("  " + d);
      o.lines.push_back("case-split closed form is central: " + verdict(rep.closed_form_central));
      o.payload = {{"computed", to_json(rep.computed)},
                   {"defining_sign", rep.defining.sign},
                   {"closed_form", to_json(rep.closed_form.expected)},
                   {"closed_form_sign", rep.closed_form.sign},
                   {"closed_form_differences", rep.closed_form.differences},
                   {"closed_form_central", rep.closed_form_central}};
      o.warnings.push_back(two_vertex_z_warning());
      o.verified = rep.closed_form.sign != 0;
      return o;
    };
  });

  // verify
  auto* verify = app.add_subcommand("verify", "acceptance checks");
  verify->require_subcommand(1);
  bool fast = false;
  auto* all_cmd = verify->add_subcommand("all", "run every acceptance criterion");
  all_cmd->add_flag("--fast", fast, "smaller ranges for a quick run");
  all_cmd->callback([&] {
    action = [&] {
      Output o;
      o.payload = json::array();
      for (int id = 1; id <= kCriterionCount; ++id) {
        auto r = run_criterion(id, fast);
        o.verified = o.verified && r.passed;
        char buf[32];
        std::snprintf(buf, sizeof buf, "%2d", id);
        o.lines.push_back("criterion " + std::string(buf) + ": " + (r.passed ? "PASS" : "FAIL") + "  " + r.title);
        for (const auto& n : r.notes) o.lines.push_back("    " + n);
        o.payload.push_back({{"id", id}, {"title", r.title}, {"passed", r.passed}, {"notes", r.notes}});
      }
      o.warnings = {worked_p3_warning(), two_vertex_z_warning()};
      return o;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  std::string command;
  for (int i = 1; i < argc; ++i) command += (i > 1 ? " " : "") + std::string(argv[i]);
  try {
    Output out = action();
    emit(command, out, flags);
    return out.verified ? 0 : kExitVerificationFailed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitComputation;
  }
}
