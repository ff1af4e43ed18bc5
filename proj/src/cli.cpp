#include "lta/cli.hpp"

#include <CLI11.hpp>

#include <optional>
#include <ostream>
#include <sstream>

#include "lta/derivations.hpp"
#include "lta/dimnil.hpp"
#include "lta/families.hpp"
#include "lta/identities.hpp"
#include "lta/io.hpp"
#include "lta/peirce.hpp"

namespace lta::cli {

namespace {

std::string format_element(const Algebra& a, const Element& x) {
  std::string s;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (sgn(x[k]) == 0) continue;
    const Rational mag = abs(x[k]);
    if (s.empty()) s += sgn(x[k]) < 0 ? "-" : "";
    else s += sgn(x[k]) < 0 ? " - " : " + ";
    if (mag != 1) s += to_string(mag) + " ";
    s += a.basis_names()[k];
  }
  return s.empty() ? "0" : s;
}

void print_subspace(std::ostream& out, const Algebra& a, const std::string& label, const Subspace& s) {
  out << label << ": dim " << s.dim() << '\n';
  for (const auto& v : s.basis_vectors()) out << "  " << format_element(a, v) << '\n';
}

void print_matrix(std::ostream& out, const Matrix& m, const std::string& indent = "  ") {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << indent;
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << to_string(m(r, c));
    out << '\n';
  }
}

Algebra load_algebra(const std::string& path) { return parse_algebra(read_text_file(path)); }

IdentitySpec parse_identity(const std::string& name) {
  if (name == "lie-triple") return IdentitySpec::lie_triple();
  if (name == "jordan") return IdentitySpec::jordan();
  if (name == "train2") return IdentitySpec::train_rank2();
  if (name.starts_with("train3:")) {
    const std::string rest = name.substr(7);
    const auto comma = rest.find(',');
    if (comma == std::string::npos) throw Error("SyntaxError", "expected train3:<c2>,<c1>");
    return IdentitySpec::train_rank3(parse_rational(rest.substr(0, comma)), parse_rational(rest.substr(comma + 1)));
  }
  throw Error("UnknownIdentity", "unknown identity '" + name + "'");
}

/// Idempotent first, then pseudo-idempotent; nullopt with the reasons otherwise.
std::optional<PeirceWitness> classify(const Algebra& a, const Element& e, std::string& why) {
  try {
    return PeirceWitness{verify_idempotent(a, e)};
  } catch (const WitnessError& idem) {
    if (idem.kind() == "ZeroElement") {
      why = "ZeroElement";
      return std::nullopt;
    }
    try {
      return PeirceWitness{verify_pseudo_idempotent(a, e)};
    } catch (const WitnessError& pseudo) {
      why = "not idempotent (" + to_string(idem.residual()) + "), not pseudo-idempotent (" +
            pseudo.kind() + ")";
      return std::nullopt;
    }
  }
}

PeirceWitness require_witness(const Algebra& a, const Element& e) {
  std::string why;
  auto w = classify(a, e, why);
  if (!w) throw Error("NotAWitness", why);
  return *w;
}

int cmd_check(const std::string& file, std::vector<std::string> names, const std::string& weight_expr,
              std::ostream& out) {
  const Algebra a = load_algebra(file);
  if (names.empty()) names = {"lie-triple", "jordan"};
  std::optional<WeightMap> weight;
  if (!weight_expr.empty()) weight = WeightMap::make(a, parse_element(a, weight_expr));
  bool all = true;
  for (const auto& name : names) {
    const IdentitySpec spec = parse_identity(name);
    const IdentityReport r = check_identity(a, spec, weight ? &*weight : nullptr);
    out << spec.name() << ": " << (r.holds ? "holds" : "fails");
    if (r.witness) {
      out << " at x = " << format_element(a, r.witness->x);
      if (!spec.is_train()) out << ", y = " << format_element(a, r.witness->y);
    }
    out << '\n';
    all = all && r.holds;
  }
  return all ? kOk : kPropertyFails;
}

int cmd_derivations(const std::string& file, std::ostream& out) {
  const Algebra a = load_algebra(file);
  const DerivationSpace space = derivation_space(a);
  out << "dim " << space.dim() << '\n';
  out << "lie-closed: " << (space.is_lie_closed() ? "yes" : "no") << '\n';
  for (std::size_t i = 0; i < space.dim(); ++i) {
    out << "d" << i + 1 << ":\n";
    print_matrix(out, space.basis()[i].matrix());
  }
  return kOk;
}

int cmd_peirce(const std::string& file, const std::string& expr, std::ostream& out) {
  const Algebra a = load_algebra(file);
  const Element e = parse_element(a, expr);
  out << "element: " << format_element(a, e) << '\n';
  std::string why;
  const auto w = classify(a, e, why);
  if (!w) {
    out << "classification: neither (" << why << ")\n";
    return kPropertyFails;
  }
  const auto* pseudo = std::get_if<PseudoIdempotentWitness>(&*w);
  if (pseudo) out << "classification: pseudo-idempotent (t = " << format_element(a, pseudo->t) << ")\n";
  else out << "classification: idempotent\n";

  const PeirceDecomposition pd = peirce_decompose(a, e);
  print_subspace(out, a, "A(1)", pd.comp1);
  print_subspace(out, a, "A(1/2)", pd.compHalf);
  print_subspace(out, a, "A(0)", pd.comp0);

  const PeirceRelationReport report = verify_peirce_relations(a, *w);
  out << "relations:\n";
  for (const auto& c : report.checks)
    out << "  " << c.item << ' ' << c.description << ": " << (c.passed ? "pass" : "FAIL") << '\n';
  bool ok = report.all_passed();

  try {
    if (pseudo) {
      const HalfIdeal hi = j_half_ideal(a, *pseudo);
      print_subspace(out, a, "J(1/2)", hi.ideal.subspace());
      out << "quotient: dim " << hi.quotient.algebra.dim() << ", image of e is idempotent\n";
    } else {
      const JIdeals j = j_ideals(a, std::get<IdempotentWitness>(*w));
      print_subspace(out, a, "J1", j.j1.subspace());
      print_subspace(out, a, "J0", j.j0.subspace());
      print_subspace(out, a, "J", j.j.subspace());
      const bool jordan = check_jordan(quotient(a, j.j).algebra).holds;
      out << "A/J jordan: " << (jordan ? "yes" : "no") << '\n';
      ok = ok && jordan;
    }
  } catch (const Error& err) {
    out << "ideals: " << err.kind() << ": " << err.what() << '\n';
    ok = false;
  }
  return ok ? kOk : kPropertyFails;
}

int cmd_quadruplet(const std::string& file, const std::string& expr, const std::string& mfile,
                   std::ostream& out) {
  const Algebra a = load_algebra(file);
  const PeirceWitness w = require_witness(a, parse_element(a, expr));
  const DerivationMatrix d = DerivationMatrix::make(a, parse_matrix(read_text_file(mfile)));
  DerivationQuadruplet q;
  try {
    q = quadruplet_decompose(a, w, d);
  } catch (const ConditionViolated& cv) {
    out << "quadruplet: " << cv.what() << '\n';
    return kPropertyFails;
  }
  out << "d(e) = " << format_element(a, q.de) << '\n';
  out << "h on A(1):\n";
  print_matrix(out, q.h);
  out << "f on A(1/2):\n";
  print_matrix(out, q.f);
  out << "g on A(0):\n";
  print_matrix(out, q.g);
  const bool round_trip = quadruplet_reconstruct(a, w, q) == d;
  out << "reconstruction: " << (round_trip ? "matches" : "DIFFERS") << '\n';
  if (const auto* p = std::get_if<PseudoIdempotentWitness>(&w))
    out << "d(t) = 0: " << (check_dt_zero(a, *p, d) ? "yes" : "no") << '\n';
  return round_trip ? kOk : kPropertyFails;
}

int report_dimnil(const Algebra& a, const DerivationMatrix& d, std::ostream& out) {
  const DimNilVerdict v = check_dim_nilpotent(a, d);
  if (!v.yes) {
    out << "dimensionally nilpotent: no (fails at power " << v.power << ")\n";
    return kPropertyFails;
  }
  out << "dimensionally nilpotent: yes (index " << v.power << ")\n";
  const AdaptedBasis ab = adapted_basis(a, d);
  out << "adapted basis (row i is the new e_i):\n" << serialize_matrix(ab.change);
  return kOk;
}

int cmd_dimnil(const std::string& file, const std::string& mfile, std::size_t budget, std::uint64_t seed,
               std::ostream& out) {
  const Algebra a = load_algebra(file);
  if (!mfile.empty()) return report_dimnil(a, DerivationMatrix::make(a, parse_matrix(read_text_file(mfile))), out);
  const SearchResult r = search_dim_nilpotent(a, budget, seed);
  if (!r.witness) {
    out << "witness: not found (budget exhausted after " << r.candidates_tried << " candidates)\n";
    return kPropertyFails;
  }
  out << "witness: found after " << r.candidates_tried << " candidates\n";
  out << "derivation:\n" << serialize_matrix(r.witness->matrix());
  return report_dimnil(a, *r.witness, out);
}

int cmd_family(const std::string& name, unsigned p, const std::string& output, std::ostream& out) {
  const std::string text = serialize_algebra(make_family(parse_family(name, p)));
  if (output.empty()) out << text;
  else write_text_file(output, text);
  return kOk;
}

std::vector<ClaimLine> example_claims() {
  std::vector<ClaimLine> lines;
  const auto add = [&](std::string anchor, std::string claim, bool ok) {
    lines.push_back({std::move(anchor), std::move(claim), ok, {}});
  };
  const Algebra two = pseudo_two_blocks();
  const Algebra with_v = pseudo_with_v();
  add("Example-two-blocks", "derivations dim=2", derivation_space(two).dim() == 2);
  add("Example-with-v", "derivations dim=3", derivation_space(with_v).dim() == 3);

  const PeirceDecomposition pd = peirce_decompose(two, two.basis_element(0));
  const Rational z = 0, one = 1, two_r = 2;
  add("Example-two-blocks", "peirce A(1)=<e+2t> A(1/2)=<t> A(0)=<u,r>",
      pd.comp1 == Subspace::span(4, {{one, two_r, z, z}}) &&
          pd.compHalf == Subspace::span(4, {{z, one, z, z}}) &&
          pd.comp0 == Subspace::span(4, {{z, z, one, z}, {z, z, z, one}}));

  for (std::size_t n : {3, 4, 5}) {
    // e0^2 = e0 + e_n, e0 ei = ei/2 on n+1 basis vectors.
    const auto pseudo_kind = n % 2 ? FamilySpec::Kind::OddPseudo : FamilySpec::Kind::EvenPseudo;
    const auto gametic_kind = (n - 1) % 2 ? FamilySpec::Kind::OddGametic : FamilySpec::Kind::EvenGametic;
    const Algebra a = make_family(FamilySpec::make(pseudo_kind, static_cast<unsigned>(n / 2)));
    const Ideal top = Ideal::make(a, Subspace::span(a.dim(), {a.basis_element(n)}));
    const Algebra g = make_family(FamilySpec::make(gametic_kind, static_cast<unsigned>((n - 1) / 2)));
    add("Example-quotient n=" + std::to_string(n), "A/Ke_n=G(" + std::to_string(n) + ",2)",
        quotient(a, top).algebra == g);
  }
  return lines;
}

int cmd_verify_paper(unsigned p_max, std::ostream& out) {
  const TheoremReport report = verify_main_theorem(p_max);
  std::size_t failures = report.failures();
  for (const auto& line : report.lines) out << line.to_string() << '\n';
  for (const auto& line : example_claims()) {
    out << line.to_string() << '\n';
    if (!line.passed) ++failures;
  }
  out << (failures == 0 ? "all claims verified" : std::to_string(failures) + " claim(s) failed") << '\n';
  return failures == 0 ? kOk : kPropertyFails;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lie triple algebra toolkit", "lta"};
  app.require_subcommand(1);

  std::string file, element, derivation, weight, output, family_name;
  std::vector<std::string> identities;
  std::size_t budget = 200;
  std::uint64_t seed = 0;
  unsigned p = 1, p_max = 4;
  bool search = false;

  auto* check = app.add_subcommand("check", "decide polynomial identities");
  check->add_option("file", file, "algebra file")->required();
  check->add_option("--identity", identities, "lie-triple | jordan | train2 | train3:<c2>,<c1>");
  check->add_option("--weight", weight, "weight map as a linear form, e.g. \"e0\"");

  auto* derivs = app.add_subcommand("derivations", "compute the derivation algebra");
  derivs->add_option("file", file, "algebra file")->required();

  auto* peirce = app.add_subcommand("peirce", "Peirce decomposition and relation audit");
  peirce->add_option("file", file, "algebra file")->required();
  peirce->add_option("--element", element, "candidate (pseudo-)idempotent")->required();

  auto* quad = app.add_subcommand("quadruplet", "decompose a derivation into (d(e), f, g, h)");
  quad->add_option("file", file, "algebra file")->required();
  quad->add_option("--element", element, "(pseudo-)idempotent")->required();
  quad->add_option("--derivation", derivation, "matrix file")->required();

  auto* dimnil = app.add_subcommand("dimnil", "dimensional nilpotency verdict or search");
  dimnil->add_option("file", file, "algebra file")->required();
  auto* dopt = dimnil->add_option("--derivation", derivation, "matrix file");
  auto* sflag = dimnil->add_flag("--search", search, "search the derivation space (default)");
  dopt->excludes(sflag);
  dimnil->add_option("--budget", budget, "random candidates to try")->capture_default_str();
  dimnil->add_option("--seed", seed, "random seed")->capture_default_str();

  auto* family = app.add_subcommand("family", "emit a classified multiplication table");
  family->add_option("name", family_name, "family name or low-dimensional tag")->required();
  family->add_option("--p", p, "size parameter")->capture_default_str();
  family->add_option("-o,--output", output, "write to a file instead of stdout");

  auto* verify = app.add_subcommand("verify-paper", "run the full reproduction suite");
  verify->add_option("--p-max", p_max, "largest size parameter")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: UsageError: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (check->parsed()) return cmd_check(file, identities, weight, out);
    if (derivs->parsed()) return cmd_derivations(file, out);
    if (peirce->parsed()) return cmd_peirce(file, element, out);
    if (quad->parsed()) return cmd_quadruplet(file, element, derivation, out);
    if (dimnil->parsed()) return cmd_dimnil(file, derivation, budget, seed, out);
    if (family->parsed()) return cmd_family(family_name, p, output, out);
    if (verify->parsed()) return cmd_verify_paper(p_max, out);
  } catch (const Error& e) {
    err << "error: " << e.kind() << ": " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace lta::cli
