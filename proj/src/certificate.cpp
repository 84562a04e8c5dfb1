#include "loopkit/certificate.hpp"

#include <algorithm>
#include <json.hpp>
#include <numeric>
#include <sstream>

#include "loopkit/error.hpp"

namespace loopkit {

using nlohmann::json;

namespace {

json table_json(const CayleyTable& t) {
  json rows = json::array();
  for (std::size_t a = 0; a < t.order(); ++a) rows.push_back(std::vector<Elem>(t.row(a).begin(), t.row(a).end()));
  return rows;
}

CayleyTable table_from(const json& j, std::size_t n, const char* what) {
  if (!j.is_array() || j.size() != n) throw Error(Errc::ParseError, std::string(what) + ": expected " + std::to_string(n) + " rows");
  std::vector<std::vector<int>> rows;
  for (const auto& r : j) rows.push_back(r.get<std::vector<int>>());
  return CayleyTable::from_rows(rows);
}

const char* op_name(Op op) {
  switch (op) {
    case Op::VarX: return "x";
    case Op::VarY: return "y";
    case Op::Mul: return "mul";
    case Op::LDiv: return "ldiv";
    case Op::RDiv: return "rdiv";
  }
  return "?";
}

Op op_from(const std::string& s) {
  if (s == "x") return Op::VarX;
  if (s == "y") return Op::VarY;
  if (s == "mul") return Op::Mul;
  if (s == "ldiv") return Op::LDiv;
  if (s == "rdiv") return Op::RDiv;
  throw Error(Errc::ParseError, "unknown term operation '" + s + "'");
}

}  // namespace

CertificateDocument document_from(const ReductCertificate& cert) {
  CertificateDocument doc;
  doc.order = cert.input.order();
  for (const auto& c : cert.series.chain) doc.series.push_back(c.elements());
  doc.primes = cert.series.primes;
  for (const auto& s : cert.stages)
    doc.stages.push_back({s.index, s.exponent.n, s.exponent.m_e, s.exponent.m_v, s.r_table});
  doc.final_star = cert.final_star;
  doc.nodes = cert.term.nodes();
  doc.root = cert.term.root();
  for (const auto& [p, f] : cert.decomposition.factors) doc.factors[p] = f.elements();
  doc.witness = cert.decomposition.witness.images;
  return doc;
}

std::string serialize_certificate(const CertificateDocument& doc) {
  json j;
  j["order"] = doc.order;
  j["series"] = {{"chain", doc.series}, {"primes", doc.primes}};
  json stages = json::array();
  for (const auto& s : doc.stages)
    stages.push_back({{"index", s.index}, {"n", s.n}, {"m_e", s.m_e}, {"m_v", s.m_v}, {"r", table_json(s.r)}});
  j["stages"] = stages;
  j["final_star"] = table_json(doc.final_star);
  json nodes = json::array();
  for (const auto& n : doc.nodes) nodes.push_back(json::array({op_name(n.op), n.left, n.right}));
  j["term"] = {{"nodes", nodes}, {"root", doc.root}};
  json factors = json::array();
  for (const auto& [p, elems] : doc.factors) factors.push_back({{"prime", p}, {"elements", elems}});
  j["decomposition"] = {{"factors", factors}, {"witness", doc.witness}};
  return j.dump(2) + "\n";
}

CertificateDocument parse_certificate(const std::string& text) {
  try {
    const json j = json::parse(text);
    CertificateDocument doc;
    doc.order = j.at("order").get<std::size_t>();
    if (doc.order == 0 || doc.order > 65535) throw Error(Errc::ParseError, "bad order");
    doc.series = j.at("series").at("chain").get<std::vector<std::vector<Elem>>>();
    doc.primes = j.at("series").at("primes").get<std::vector<std::uint64_t>>();
    for (const auto& s : j.at("stages"))
      doc.stages.push_back({s.at("index").get<std::size_t>(), s.at("n").get<std::uint64_t>(),
                            s.at("m_e").get<std::uint64_t>(), s.at("m_v").get<std::uint64_t>(),
                            table_from(s.at("r"), doc.order, "stage r")});
    doc.final_star = table_from(j.at("final_star"), doc.order, "final_star");
    for (const auto& n : j.at("term").at("nodes")) {
      if (!n.is_array() || n.size() != 3) throw Error(Errc::ParseError, "term node must be [op, left, right]");
      doc.nodes.push_back({op_from(n[0].get<std::string>()), n[1].get<NodeId>(), n[2].get<NodeId>()});
    }
    doc.root = j.at("term").at("root").get<NodeId>();
    for (const auto& f : j.at("decomposition").at("factors"))
      doc.factors[f.at("prime").get<std::uint64_t>()] = f.at("elements").get<std::vector<Elem>>();
    doc.witness = j.at("decomposition").at("witness").get<std::vector<Elem>>();
    return doc;
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string("certificate: ") + e.what());
  }
}

bool VerificationReport::ok() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.ok; });
}

namespace {

// Plain table arithmetic for the checker; shares nothing with the builder.
struct Ops {
  std::size_t n = 0;
  const CayleyTable* mul = nullptr;
  std::vector<Elem> ld, rd;  // a\b at a*n+b, a/b at a*n+b

  explicit Ops(const CayleyTable& t) : n(t.order()), mul(&t), ld(n * n), rd(n * n) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        ld[a * n + t(a, b)] = static_cast<Elem>(b);
        rd[t(a, b) * n + b] = static_cast<Elem>(a);
      }
  }
  Elem m(Elem a, Elem b) const { return (*mul)(a, b); }
  Elem l(Elem a, Elem b) const { return ld[a * n + b]; }
  Elem r(Elem a, Elem b) const { return rd[a * n + b]; }
  Elem pow(Elem x, std::uint64_t k) const {
    Elem acc = 0;
    for (std::uint64_t i = 0; i < k; ++i) acc = m(acc, x);
    return acc;
  }
};

bool is_loop_table(const CayleyTable& t) { return t.order() > 0 && t.is_latin() && t.has_identity_zero(); }

bool is_closed(const Ops& o, const std::vector<Elem>& s) {
  std::vector<char> in(o.n, 0);
  for (Elem e : s) {
    if (e >= o.n) return false;
    in[e] = 1;
  }
  if (s.empty() || !in[0]) return false;
  for (Elem a : s)
    for (Elem b : s)
      if (!in[o.m(a, b)] || !in[o.l(a, b)] || !in[o.r(a, b)]) return false;
  return true;
}

// Class labels of the congruence whose zero class is s, or empty when s is
// not the kernel of a congruence.
std::vector<int> congruence_classes(const Ops& o, const std::vector<Elem>& s) {
  if (!is_closed(o, s)) return {};
  std::vector<int> cls(o.n, -1);
  int next = 0;
  for (std::size_t a = 0; a < o.n; ++a) {
    if (cls[a] != -1) continue;
    std::vector<Elem> left, right;
    for (Elem m : s) {
      left.push_back(o.m(static_cast<Elem>(a), m));
      right.push_back(o.m(m, static_cast<Elem>(a)));
    }
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    if (left != right) return {};
    for (Elem e : left) {
      if (cls[e] != -1) return {};
      cls[e] = next;
    }
    ++next;
  }
  std::vector<std::vector<Elem>> members(next);
  for (std::size_t a = 0; a < o.n; ++a) members[cls[a]].push_back(static_cast<Elem>(a));
  for (std::size_t a = 0; a < o.n; ++a)
    for (std::size_t b = 0; b < o.n; ++b) {
      const int cm = cls[o.m(a, b)], cl = cls[o.l(a, b)], cr = cls[o.r(a, b)];
      for (Elem a2 : members[cls[a]])
        for (Elem b2 : members[cls[b]])
          if (cls[o.m(a2, b2)] != cm || cls[o.l(a2, b2)] != cl || cls[o.r(a2, b2)] != cr) return {};
    }
  return cls;
}

bool is_prime_number(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

bool power_of(std::uint64_t n, std::uint64_t p) {
  if (n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

// Nilpotence by iterating centers of quotients, on raw tables.
bool nilpotent_table(const CayleyTable& t) {
  const Ops o(t);
  std::vector<Elem> z{0};
  while (true) {
    const auto cls = congruence_classes(o, z);
    if (cls.empty()) return false;
    std::vector<Elem> next;
    for (std::size_t c = 0; c < o.n; ++c) {
      bool central = true;
      for (std::size_t x = 0; x < o.n && central; ++x)
        for (std::size_t y = 0; y < o.n && central; ++y) {
          central = cls[o.m(c, x)] == cls[o.m(x, c)] &&
                    cls[o.m(o.m(c, x), y)] == cls[o.m(c, o.m(x, y))] &&
                    cls[o.m(o.m(x, c), y)] == cls[o.m(x, o.m(c, y))] &&
                    cls[o.m(o.m(x, y), c)] == cls[o.m(x, o.m(y, c))];
        }
      if (central) next.push_back(static_cast<Elem>(c));
    }
    if (next.size() == o.n) return true;
    if (next.size() == z.size()) return false;
    z = std::move(next);
  }
}

}  // namespace

VerificationReport verify_certificate(const CertificateDocument& doc, const CayleyTable& input) {
  VerificationReport rep;
  auto add = [&](std::string name, bool ok, std::string detail = {}) {
    rep.checks.push_back({std::move(name), ok, std::move(detail)});
    return ok;
  };

  const std::size_t n = input.order();
  if (!add("input is a loop", is_loop_table(input))) return rep;
  if (!add("order matches", doc.order == n, std::to_string(doc.order) + " vs " + std::to_string(n))) return rep;
  const Ops in(input);

  // Series: A = C_0 > ... > C_k = {0}, prime indices, normal, central.
  bool shape = !doc.series.empty() && doc.series.size() == doc.primes.size() + 1 &&
               doc.series.back() == std::vector<Elem>{0} && doc.series.front().size() == n;
  for (std::size_t i = 0; shape && i + 1 < doc.series.size(); ++i) {
    const auto& a = doc.series[i];
    const auto& b = doc.series[i + 1];
    shape = std::is_sorted(a.begin(), a.end()) && std::is_sorted(b.begin(), b.end()) &&
            std::includes(a.begin(), a.end(), b.begin(), b.end()) && is_prime_number(doc.primes[i]) &&
            a.size() == b.size() * doc.primes[i];
  }
  add("series has prime-index steps", shape);
  std::vector<std::vector<int>> classes;
  bool normal = shape;
  for (std::size_t i = 0; normal && i < doc.series.size(); ++i) {
    classes.push_back(congruence_classes(in, doc.series[i]));
    normal = !classes.back().empty();
  }
  add("series terms are normal subloops", normal);
  bool central = normal;
  for (std::size_t i = 0; central && i + 1 < doc.series.size(); ++i) {
    const auto& cls = classes[i + 1];
    for (Elem z : doc.series[i])
      for (std::size_t x = 0; x < n && central; ++x)
        for (std::size_t y = 0; y < n && central; ++y)
          central = cls[in.m(z, x)] == cls[in.m(x, z)] &&
                    cls[in.m(in.m(z, x), y)] == cls[in.m(z, in.m(x, y))] &&
                    cls[in.m(in.m(x, z), y)] == cls[in.m(x, in.m(z, y))] &&
                    cls[in.m(in.m(x, y), z)] == cls[in.m(x, in.m(y, z))];
  }
  add("series is central", central);

  // Stages: rebuild each operation from the previous one and r.
  bool stages_ok = shape && !doc.stages.empty() && doc.stages.back().index == doc.primes.size();
  std::string stage_detail;
  CayleyTable star = input;
  for (std::size_t s = 0; stages_ok && s < doc.stages.size(); ++s) {
    const CertificateStage& st = doc.stages[s];
    if (s == 0) {
      stages_ok = std::all_of(st.r.cells().begin(), st.r.cells().end(), [](Elem e) { return e == 0; });
      if (!stages_ok) stage_detail = "first stage must have r = 0";
      continue;
    }
    if (st.index != doc.stages[s - 1].index + 1) {
      stages_ok = false;
      stage_detail = "stage indices are not consecutive";
      break;
    }
    const std::uint64_t p = doc.primes[st.index - 1];
    if (st.m_e == 0 || st.m_v == 0 || std::gcd(st.m_e, st.m_v) != 1 || st.n % st.m_e != 1 % st.m_e ||
        st.n % st.m_v != 0 || !power_of(st.m_e, p) || st.m_v % p == 0) {
      stages_ok = false;
      stage_detail = "stage " + std::to_string(st.index) + ": exponent congruences fail";
      break;
    }
    const Ops prev(star);
    std::vector<char> in_c(n, 0);
    for (Elem e : doc.series[st.index - 1]) in_c[e] = 1;
    CayleyTable next(n);
    for (std::size_t x = 0; x < n && stages_ok; ++x)
      for (std::size_t y = 0; y < n && stages_ok; ++y) {
        const Elem xy = prev.m(x, y);
        const Elem r = prev.r(prev.pow(xy, st.n), prev.m(prev.pow(x, st.n), prev.pow(y, st.n)));
        if (r != st.r(x, y) || !in_c[r]) {
          stages_ok = false;
          stage_detail = "stage " + std::to_string(st.index) + ": r differs from its definition";
        }
        next.at(x, y) = prev.r(xy, r);
      }
    if (stages_ok && !is_loop_table(next)) {
      stages_ok = false;
      stage_detail = "stage " + std::to_string(st.index) + ": operation is not a loop";
    }
    star = std::move(next);
  }
  add("stages rebuild the operations", stages_ok, stage_detail);
  add("final star is a loop", is_loop_table(doc.final_star));
  add("final star matches the last stage", stages_ok && star == doc.final_star);

  // Term DAG.
  try {
    const TermDag dag(doc.nodes, doc.root);
    const FiniteLoop base(input);
    add("term evaluates to the final star", eval_table(base, dag) == doc.final_star);
  } catch (const Error& e) {
    add("term evaluates to the final star", false, e.what());
  }

  if (!is_loop_table(doc.final_star)) return rep;
  const Ops fin(doc.final_star);

  // Decomposition into normal nilpotent factors of prime-power order.
  bool factors_ok = !doc.factors.empty();
  std::uint64_t product = 1;
  std::vector<std::vector<Elem>> parts;
  for (const auto& [p, elems] : doc.factors) {
    std::vector<Elem> sorted = elems;
    std::sort(sorted.begin(), sorted.end());
    const bool ok = is_prime_number(p) && sorted == elems &&
                    std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end() &&
                    power_of(elems.size(), p) && !congruence_classes(fin, elems).empty();
    if (!ok) {
      factors_ok = false;
      break;
    }
    std::vector<std::vector<int>> rows(elems.size(), std::vector<int>(elems.size()));
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (std::size_t j = 0; j < elems.size(); ++j) {
        const Elem v = fin.m(elems[i], elems[j]);
        rows[i][j] = static_cast<int>(std::lower_bound(elems.begin(), elems.end(), v) - elems.begin());
      }
    factors_ok = factors_ok && nilpotent_table(CayleyTable::from_rows(rows));
    product *= elems.size();
    parts.push_back(elems);
  }
  factors_ok = factors_ok && product == n;
  add("decomposition factors are normal nilpotent prime-power subloops", factors_ok);

  // Witness: index -> left-nested product of factor elements, mixed radix.
  bool witness_ok = factors_ok && doc.witness.size() == n;
  if (witness_ok) {
    std::vector<std::vector<std::size_t>> digits(n);
    std::vector<char> seen(n, 0);
    for (std::size_t idx = 0; idx < n && witness_ok; ++idx) {
      std::size_t rest = idx, radix = n;
      Elem acc = 0;
      for (const auto& part : parts) {
        radix /= part.size();
        const std::size_t d = rest / radix;
        rest %= radix;
        digits[idx].push_back(d);
        acc = fin.m(acc, part[d]);
      }
      witness_ok = doc.witness[idx] == acc && doc.witness[idx] < n && !seen[acc];
      if (witness_ok) seen[acc] = 1;
    }
    std::vector<std::vector<std::size_t>> pos(parts.size(), std::vector<std::size_t>(n, 0));
    for (std::size_t f = 0; f < parts.size(); ++f)
      for (std::size_t i = 0; i < parts[f].size(); ++i) pos[f][parts[f][i]] = i;
    for (std::size_t a = 0; a < n && witness_ok; ++a)
      for (std::size_t b = 0; b < n && witness_ok; ++b) {
        std::size_t idx = 0;
        for (std::size_t f = 0; f < parts.size(); ++f) {
          const Elem u = parts[f][digits[a][f]], v = parts[f][digits[b][f]];
          idx = idx * parts[f].size() + pos[f][fin.m(u, v)];
        }
        witness_ok = doc.witness[idx] == fin.m(doc.witness[a], doc.witness[b]);
      }
  }
  add("witness is an isomorphism from the product of factors", witness_ok);
  return rep;
}

}  // namespace loopkit
