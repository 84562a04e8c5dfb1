#include "loopkit/cli.hpp"

#include <CLI11.hpp>
#include <ostream>
#include <sstream>

#include "loopkit/certificate.hpp"
#include "loopkit/clonoid.hpp"
#include "loopkit/clonoid_terms.hpp"
#include "loopkit/enumerate.hpp"
#include "loopkit/error.hpp"
#include "loopkit/group_reducts.hpp"
#include "loopkit/io.hpp"
#include "loopkit/reduct.hpp"
#include "loopkit/supernilpotence.hpp"

namespace loopkit {

namespace {

std::string join(const std::vector<Elem>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

FiniteLoop named_group(const std::string& name) {
  auto number = [&](std::size_t skip) -> std::size_t {
    const std::string digits = name.substr(skip);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 4)
      throw Error(Errc::ParseError, "unknown group '" + name + "'");
    return std::stoul(digits);
  };
  if (name == "q8") return groups::quaternion();
  if (name == "s3") return groups::symmetric3();
  if (name == "wreath") return groups::wreath_z3_z3();
  if (name.rfind("heis", 0) == 0) {
    const std::size_t p = number(4);
    if (!is_prime(p) || p > 37) throw Error(Errc::ParseError, "heis needs a small prime");
    return groups::heisenberg(p);
  }
  if (name.rfind("z", 0) == 0) {
    const std::size_t m = number(1);
    if (m == 0 || m > 4096) throw Error(Errc::ParseError, "cyclic order out of range");
    return groups::cyclic(m);
  }
  if (name.rfind("d", 0) == 0) {
    const std::size_t m = number(1);
    if (m < 2 || m % 2 || m > 4096) throw Error(Errc::ParseError, "dihedral order must be even");
    return groups::dihedral(m);
  }
  throw Error(Errc::ParseError, "unknown group '" + name + "'");
}

std::vector<std::uint32_t> parse_values(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 9)
      throw Error(Errc::ParseError, "bad value '" + item + "' in --f");
    out.push_back(static_cast<std::uint32_t>(std::stoul(item)));
  }
  return out;
}

void print_fn(std::ostream& out, const FnTable& f) {
  for (std::size_t i = 0; i < f.values.size(); ++i) out << (i ? " " : "") << f.values[i];
  out << "\n";
}

int cmd_check(const std::string& file, std::ostream& out) {
  const FiniteLoop l = read_loop_file(file);
  const CentralSeries s = upper_central_series(l);
  out << "order " << l.order() << "\n";
  out << "associative " << yes_no(l.is_associative()) << "\n";
  out << "commutative " << yes_no(l.is_commutative()) << "\n";
  out << "center " << join(center(l).elements()) << "\n";
  if (s.nilpotent)
    out << "nilpotent yes class " << s.nilpotency_class << "\n";
  else
    out << "nilpotent no\n";
  out << "supernilpotent (sylow decomposition) " << yes_no(is_supernilpotent_decomp(l).has_value()) << "\n";
  out << "supernilpotent (multiplication group) " << yes_no(is_supernilpotent_wright(l)) << "\n";
  return 0;
}

int cmd_reduct(const std::string& file, const std::string& cert_path, std::ostream& out) {
  const FiniteLoop l = read_loop_file(file);
  const ReductCertificate cert = build_reduct(l);
  out << "series primes";
  for (auto p : cert.series.primes) out << " " << p;
  out << "\n";
  for (const auto& st : cert.stages)
    out << "stage " << st.index << " n " << st.exponent.n << " m_e " << st.exponent.m_e << " m_v "
        << st.exponent.m_v << "\n";
  const FiniteLoop fin(cert.final_star);
  out << "final associative " << yes_no(fin.is_associative()) << " commutative "
      << yes_no(fin.is_commutative()) << "\n";
  out << "term nodes " << cert.term.size() << "\n";
  for (const auto& [p, f] : cert.decomposition.factors) out << "factor " << p << ": " << join(f.elements()) << "\n";
  out << serialize_loop(cert.final_star);
  if (!cert_path.empty()) {
    write_text_file(cert_path, serialize_certificate(document_from(cert)));
    out << "certificate written to " << cert_path << "\n";
  }
  return 0;
}

int cmd_corollary(const std::string& file, const std::string& normal, std::ostream& out) {
  const FiniteLoop l = read_loop_file(file);
  Subloop sub{parse_element_list(normal, l.order())};
  std::sort(sub.elements.begin(), sub.elements.end());
  sub.elements.erase(std::unique(sub.elements.begin(), sub.elements.end()), sub.elements.end());
  const NormalSubloop n = as_normal(l, sub);
  const CorollaryResult res = corollary_reduct(l, n);
  out << "series primes";
  for (auto p : res.series.primes) out << " " << p;
  out << "\nnormal subloop at index " << res.start_index << "\n";
  out << "star term nodes " << res.star_term.size() << ", r term nodes " << res.r_term.size() << "\n";
  out << "# star\n" << serialize_loop(res.star) << "# r with x.y = r(x,y) * (x * y)\n";
  for (std::size_t a = 0; a < l.order(); ++a) {
    for (std::size_t b = 0; b < l.order(); ++b) out << (b ? " " : "") << res.r_table(a, b);
    out << "\n";
  }
  return 0;
}

int cmd_enumerate(std::size_t order, const std::string& filter, bool canonical, std::ostream& out) {
  const auto loops = enumerate_loops(order, parse_loop_filter(filter), canonical);
  out << "# count " << loops.size() << "\n";
  for (std::size_t i = 0; i < loops.size(); ++i) out << "# loop " << i + 1 << "\n" << serialize_loop(loops[i].table());
  return 0;
}

FiniteLoop group_source(const std::string& name, const std::string& file) {
  if (!file.empty()) return read_loop_file(file);
  if (name.empty()) throw Error(Errc::ParseError, "give --group or --file");
  return named_group(name);
}

int cmd_group(const std::string& action, const std::string& name, const std::string& file, unsigned n,
              std::ostream& out) {
  if (action == "scan-dihedral") {
    const DihedralScan s = dihedral_reduct_class_scan(n);
    out << "D" << s.order << "\n";
    for (const auto& e : s.entries) {
      out << "c " << e.c << " group " << yes_no(e.is_group);
      if (e.is_group) out << " class " << e.nilpotency_class;
      out << "\n";
    }
    return 0;
  }
  if (action == "wreath-facts") {
    const WreathFacts f = wreath_obstruction_facts();
    out << "order " << f.order << "\nexponent " << f.exponent << "\nclass " << f.nilpotency_class
        << "\nbase order " << f.base_size << " normal " << yes_no(f.base_normal) << " abelian "
        << yes_no(f.base_abelian) << " exponent " << f.base_exponent << "\n";
    if (f.outside_order_three)
      out << "element of order 3 outside the base: " << *f.outside_order_three << "\n";
    else
      out << "no element of order 3 outside the base (" << f.outside_checked << " checked)\n";
    out << f.unproven_step << "\n";
    return 0;
  }
  const GroupView g = group_view(group_source(name, file));
  out << "order " << g.loop.order() << " derived order " << g.derived.size() << " derived exponent "
      << g.derived_exponent << " 2-nilpotent " << yes_no(is_2_nilpotent(g)) << "\n";
  if (action == "family") {
    for (const auto& m : reduct_family(g)) out << "# c " << m.c << "\n" << serialize_loop(m.table);
  } else if (action == "abelian-reduct") {
    const auto ab = abelian_reduct(g);
    if (ab)
      out << "# c " << ab->c << "\n" << serialize_loop(ab->table);
    else
      out << "none: derived exponent is even\n";
  } else if (action == "baer") {
    const BaerResult b = baer_trick(g);
    out << "# k " << b.k << "\n" << serialize_loop(b.table);
  } else {
    throw Error(Errc::ParseError, "unknown group action '" + action + "'");
  }
  return 0;
}

struct ClonoidArgs {
  std::uint32_t q = 0, p = 0;
  std::string f;
  std::size_t n = 1;
  std::string term, term2;
};

int cmd_clonoid(const std::string& action, const ClonoidArgs& a, std::ostream& out) {
  const FnTable f = unary_fn(a.q, a.p, parse_values(a.f));
  if (action == "dims") {
    const ClonoidSpan span = clonoid_span(f, a.n);
    out << "dim C^[" << a.n << "] " << span.dimension << "\n";
    if (auto b = search_basis_parameter(f)) {
      const DimensionCheck d = dimension_formula_check(*b, a.n);
      out << "k " << b->k << " predicted " << d.predicted << " " << (d.holds() ? "match" : "MISMATCH") << "\n";
    } else {
      out << "no basis parameter: C^[1] has no basis of the form f(a^i x)\n";
    }
    return 0;
  }
  const ClonoidBasis basis = find_basis_parameter(f);
  if (action == "basis") {
    out << "a " << basis.a << " k " << basis.k << "\n";
    for (std::size_t i = 0; i < basis.b.size(); ++i) {
      out << "B" << i << " ";
      print_fn(out, basis.b[i]);
    }
  } else if (action == "rows") {
    for (const auto& row : coefficient_rows(basis)) {
      out << "c " << row.c << " d";
      for (auto d : row.d) out << " " << d;
      out << "\n";
    }
  } else if (action == "normalize") {
    const TermRewriter rw(basis);
    const TermPtr t = parse_term(a.term);
    const NormalFormTerm nf = rw.normalize(*t);
    out << print_term(*rw.to_term(nf)) << "\n" << sigma_description(basis);
  } else if (action == "equal") {
    const TermRewriter rw(basis);
    out << (rw.terms_equal(*parse_term(a.term), *parse_term(a.term2)) ? "equal" : "different") << "\n";
  } else {
    throw Error(Errc::ParseError, "unknown clonoid action '" + action + "'");
  }
  return 0;
}

int cmd_verify(const std::string& cert, const std::string& file, std::ostream& out) {
  const CertificateDocument doc = parse_certificate(read_text_file(cert));
  const CayleyTable input = parse_loop_text(read_text_file(file));
  const VerificationReport rep = verify_certificate(doc, input);
  for (const auto& c : rep.checks) {
    out << (c.ok ? "ok   " : "FAIL ") << c.name;
    if (!c.detail.empty() && !c.ok) out << " (" << c.detail << ")";
    out << "\n";
  }
  out << (rep.ok() ? "certificate verified" : "certificate rejected") << "\n";
  return rep.ok() ? 0 : 1;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite loops, supernilpotent reducts and clonoids"};
  app.require_subcommand(1);

  std::string file, cert, normal, filter = "all", group_name, term, term2;
  std::size_t order = 0;
  bool canonical = false;
  unsigned scan_n = 3;
  ClonoidArgs ca;

  auto* check = app.add_subcommand("check", "validate a .loop file and report its structure");
  check->add_option("file", file)->required();

  auto* reduct = app.add_subcommand("reduct", "build a supernilpotent reduct");
  reduct->add_option("file", file)->required();
  reduct->add_option("--cert", cert, "write the certificate here");

  auto* cor = app.add_subcommand("corollary", "reduct through a normal subloop");
  cor->add_option("file", file)->required();
  cor->add_option("--normal", normal, "comma separated elements")->required();

  auto* en = app.add_subcommand("enumerate", "enumerate small loops");
  en->add_option("--order", order)->required();
  en->add_option("--filter", filter)->check(CLI::IsMember({"all", "nilpotent", "nilpotent-nonassociative"}));
  en->add_flag("--canonical", canonical, "one table per isomorphism class");

  auto* grp = app.add_subcommand("group", "reducts of groups");
  grp->require_subcommand(1);
  std::vector<CLI::App*> group_actions;
  for (const char* name : {"family", "abelian-reduct", "baer"}) {
    auto* sub = grp->add_subcommand(name);
    sub->add_option("--group", group_name, "z<m>, d<2m>, q8, heis<p>, wreath or s3");
    sub->add_option("--file", file);
    group_actions.push_back(sub);
  }
  auto* scan = grp->add_subcommand("scan-dihedral");
  scan->add_option("--n", scan_n, "scan D_{2^(n+1)}")->check(CLI::Range(2u, 8u));
  group_actions.push_back(scan);
  group_actions.push_back(grp->add_subcommand("wreath-facts"));

  auto* clo = app.add_subcommand("clonoid", "clonoids of functions Z_q -> Z_p");
  clo->add_option("--q", ca.q)->required();
  clo->add_option("--p", ca.p)->required();
  clo->add_option("--f", ca.f, "values f(0),...,f(q-1)")->required();
  clo->require_subcommand(1);
  std::vector<CLI::App*> clonoid_actions;
  clonoid_actions.push_back(clo->add_subcommand("basis"));
  auto* dims = clo->add_subcommand("dims");
  dims->add_option("--n", ca.n)->check(CLI::Range(1, 4));
  clonoid_actions.push_back(dims);
  clonoid_actions.push_back(clo->add_subcommand("rows"));
  auto* norm = clo->add_subcommand("normalize");
  norm->add_option("term", ca.term)->required();
  clonoid_actions.push_back(norm);
  auto* eq = clo->add_subcommand("equal");
  eq->add_option("t1", ca.term)->required();
  eq->add_option("t2", ca.term2)->required();
  clonoid_actions.push_back(eq);

  auto* ver = app.add_subcommand("verify", "check a certificate against its input");
  ver->add_option("cert", cert)->required();
  ver->add_option("file", file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (check->parsed()) return cmd_check(file, out);
    if (reduct->parsed()) return cmd_reduct(file, cert, out);
    if (cor->parsed()) return cmd_corollary(file, normal, out);
    if (en->parsed()) return cmd_enumerate(order, filter, canonical, out);
    if (grp->parsed())
      for (auto* sub : group_actions)
        if (sub->parsed()) return cmd_group(sub->get_name(), group_name, file, scan_n, out);
    if (clo->parsed())
      for (auto* sub : clonoid_actions)
        if (sub->parsed()) return cmd_clonoid(sub->get_name(), ca, out);
    if (ver->parsed()) return cmd_verify(cert, file, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
  return 1;
}

}  // namespace loopkit
