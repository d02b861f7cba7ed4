#pragma once

// JSON encoding of every report type. All unbounded integers are decimal
// strings; small structural integers (dimensions, parities, degrees of
// enumerated multidegrees, group indices) are JSON numbers.

#include <json.hpp>

#include <string>
#include <vector>

#include "sasaki_hodge/boothby_wang.hpp"
#include "sasaki_hodge/cohomology_ring.hpp"
#include "sasaki_hodge/complete_intersection.hpp"
#include "sasaki_hodge/horikawa.hpp"
#include "sasaki_hodge/integer.hpp"
#include "sasaki_hodge/pair_search.hpp"
#include "sasaki_hodge/reference_tables.hpp"
#include "sasaki_hodge/surface_invariants.hpp"
#include "sasaki_hodge/surface_tuples.hpp"

namespace nlohmann {

template <>
struct adl_serializer<mpz_class> {
  static void to_json(json& j, const mpz_class& v) { j = v.get_str(); }
  static void from_json(const json& j, mpz_class& v) {
    if (!j.is_string()) throw sasaki::DomainError("expected a decimal string, got " + j.dump());
    v = sasaki::parse_integer(j.get<std::string>());
  }
};

template <>
struct adl_serializer<sasaki::HodgeDiamond> {
  static void to_json(json& j, const sasaki::HodgeDiamond& d) {
    json rows = json::array();
    for (int p = 0; p <= d.dim(); ++p) {
      json row = json::array();
      for (int q = 0; q <= d.dim(); ++q) row.push_back(d.at(p, q));
      rows.push_back(row);
    }
    j = json{{"dim", d.dim()}, {"h", rows}};
  }
  static sasaki::HodgeDiamond from_json(const json& j) {
    sasaki::HodgeDiamond d(j.at("dim").get<int>());
    const auto& rows = j.at("h");
    for (int p = 0; p <= d.dim(); ++p) {
      for (int q = 0; q <= d.dim(); ++q) d.at(p, q) = rows.at(p).at(q).get<mpz_class>();
    }
    return d;
  }
};

template <>
struct adl_serializer<sasaki::CohomologyClass> {
  static void to_json(json& j, const sasaki::CohomologyClass& c) {
    json terms = json::array();
    for (const auto& [e, coeff] : c.terms()) terms.push_back(json{{"exponent", e}, {"coeff", coeff}});
    j = json{{"ambient", c.ambient().factor_dims()}, {"terms", terms}, {"text", c.to_string()}};
  }
  static sasaki::CohomologyClass from_json(const json& j) {
    sasaki::AmbientSpace ambient(j.at("ambient").get<std::vector<int>>());
    sasaki::CohomologyClass c(ambient);
    for (const auto& t : j.at("terms")) {
      c += sasaki::CohomologyClass::monomial(ambient, t.at("exponent").get<sasaki::Exponent>(),
                                             t.at("coeff").get<mpz_class>());
    }
    return c;
  }
};

template <>
struct adl_serializer<sasaki::ChernReport> {
  static void to_json(json& j, const sasaki::ChernReport& r) {
    j = json{{"dim", r.dim}, {"c1", r.c1}};
    if (r.dim == 2) {
      j["c1sq"] = r.surface().c1sq;
      j["c2"] = r.surface().c2;
    } else {
      j["c1cube"] = r.threefold().c1cube;
      j["c1c2"] = r.threefold().c1c2;
      j["c3"] = r.threefold().c3;
      j["p1_pairing"] = r.threefold().p1_pairing;
    }
  }
  static sasaki::ChernReport from_json(const json& j) {
    const int dim = j.at("dim").get<int>();
    auto c1 = j.at("c1").get<sasaki::CohomologyClass>();
    if (dim == 2) {
      return sasaki::ChernReport{
          dim, c1,
          sasaki::SurfaceChernNumbers{j.at("c1sq").get<mpz_class>(), j.at("c2").get<mpz_class>()}};
    }
    return sasaki::ChernReport{
        dim, c1,
        sasaki::ThreefoldChernNumbers{j.at("c1cube").get<mpz_class>(), j.at("c1c2").get<mpz_class>(),
                                      j.at("c3").get<mpz_class>(),
                                      j.at("p1_pairing").get<mpz_class>()}};
  }
};

}  // namespace nlohmann

namespace sasaki {

using json = nlohmann::json;

inline void to_json(json& j, const SurfaceInvariants& s) {
  j = json{{"c1", s.c1_coeffs}, {"c1sq", s.c1sq},   {"c2", s.c2},         {"chi_o", s.chi_o},
           {"b2", s.b2},        {"h02", s.h02},     {"h11", s.h11},       {"spin", s.spin},
           {"d_c1", s.c1_div},  {"ample_canonical", s.ample_canonical}};
}
inline void from_json(const json& j, SurfaceInvariants& s) {
  j.at("c1").get_to(s.c1_coeffs);
  j.at("c1sq").get_to(s.c1sq);
  j.at("c2").get_to(s.c2);
  j.at("chi_o").get_to(s.chi_o);
  j.at("b2").get_to(s.b2);
  j.at("h02").get_to(s.h02);
  j.at("h11").get_to(s.h11);
  j.at("spin").get_to(s.spin);
  j.at("d_c1").get_to(s.c1_div);
  j.at("ample_canonical").get_to(s.ample_canonical);
}

/// Input record for Boothby-Wang classification. Derived surface fields are
/// recomputed from (c1, c1sq, c2); "spin" optionally overrides the parity rule.
inline void to_json(json& j, const BaseSurfaceData& b) {
  j = json{{"c1", b.inv.c1_coeffs},
           {"c1sq", b.inv.c1sq},
           {"c2", b.inv.c2},
           {"spin", b.inv.spin},
           {"ample_canonical", b.inv.ample_canonical},
           {"euler_class", b.euler_class},
           {"simply_connected", b.simply_connected}};
}
inline void from_json(const json& j, BaseSurfaceData& b) {
  std::optional<bool> spin;
  if (j.contains("spin")) spin = j.at("spin").get<bool>();
  b.inv = SurfaceInvariants::from_chern_data(
      j.at("c1").get<std::vector<Integer>>(), j.at("c1sq").get<Integer>(),
      j.at("c2").get<Integer>(), j.value("ample_canonical", false), spin);
  j.at("euler_class").get_to(b.euler_class);
  b.simply_connected = j.value("simply_connected", true);
}

inline void to_json(json& j, const TupleRow& r) {
  j = json{{"q", r.q}, {"p", r.p}, {"c1sq", r.c1sq}, {"c2", r.c2}, {"d_c1", r.c1_div}};
}
inline void from_json(const json& j, TupleRow& r) {
  j.at("q").get_to(r.q);
  j.at("p").get_to(r.p);
  j.at("c1sq").get_to(r.c1sq);
  j.at("c2").get_to(r.c2);
  j.at("d_c1").get_to(r.c1_div);
}

inline void to_json(json& j, const TupleSearchResult& r) {
  j = json{{"q_list", r.q_list}, {"n", r.n}, {"rows", r.rows}, {"groups", r.groups}};
}
inline void from_json(const json& j, TupleSearchResult& r) {
  j.at("q_list").get_to(r.q_list);
  j.at("n").get_to(r.n);
  j.at("rows").get_to(r.rows);
  j.at("groups").get_to(r.groups);
}

inline void to_json(json& j, const HypersurfaceP1P2& h) { j = json{{"p", h.p}, {"q", h.q}}; }
inline void from_json(const json& j, HypersurfaceP1P2& h) {
  j.at("p").get_to(h.p);
  j.at("q").get_to(h.q);
}

inline void to_json(json& j, const WallInvariants& w) {
  j = json{{"d", w.d}, {"k", w.k}, {"m", w.m}, {"e", w.e}, {"k_parity", w.k_parity}};
}
inline void from_json(const json& j, WallInvariants& w) {
  j.at("d").get_to(w.d);
  j.at("k").get_to(w.k);
  j.at("m").get_to(w.m);
  j.at("e").get_to(w.e);
  j.at("k_parity").get_to(w.k_parity);
}

inline void to_json(json& j, const ThreefoldHodge& h) {
  j = json{{"h03", h.h03}, {"h12", h.h12}, {"b3", h.b3}, {"chi_o", h.chi_o}};
}
inline void from_json(const json& j, ThreefoldHodge& h) {
  j.at("h03").get_to(h.h03);
  j.at("h12").get_to(h.h12);
  j.at("b3").get_to(h.b3);
  j.at("chi_o").get_to(h.chi_o);
}

inline void to_json(json& j, const ManifoldType& m) {
  j = json{{"type", m.kind == ManifoldType::Kind::SpinSum ? "SpinSum" : "NonSpinSum"},
           {"n", m.n},
           {"text", m.to_string()}};
}
inline void from_json(const json& j, ManifoldType& m) {
  const auto type = j.at("type").get<std::string>();
  if (type == "SpinSum") {
    m.kind = ManifoldType::Kind::SpinSum;
  } else if (type == "NonSpinSum") {
    m.kind = ManifoldType::Kind::NonSpinSum;
  } else {
    throw DomainError("unknown manifold type " + type);
  }
  j.at("n").get_to(m.n);
}

inline void to_json(json& j, const BasicHodge& h) {
  j = json{{"h02", h.h02}, {"h11", h.h11}, {"b2", h.b2}};
}
inline void from_json(const json& j, BasicHodge& h) {
  j.at("h02").get_to(h.h02);
  j.at("h11").get_to(h.h11);
  j.at("b2").get_to(h.b2);
}

inline void to_json(json& j, const BoothbyWangReport& r) {
  j = json{{"manifold", r.manifold},         {"contact_c1_zero", r.contact_c1_zero},
           {"hamilton_div", r.hamilton_div}, {"basic_hodge", r.basic_hodge},
           {"negative_type", r.negative_type}, {"note", r.note}};
}
inline void from_json(const json& j, BoothbyWangReport& r) {
  j.at("manifold").get_to(r.manifold);
  j.at("contact_c1_zero").get_to(r.contact_c1_zero);
  j.at("hamilton_div").get_to(r.hamilton_div);
  j.at("basic_hodge").get_to(r.basic_hodge);
  j.at("negative_type").get_to(r.negative_type);
  j.at("note").get_to(r.note);
}

inline ContactVerdict contact_verdict_from_string(const std::string& s) {
  if (s == "Inequivalent") return ContactVerdict::Inequivalent;
  if (s == "Inconclusive") return ContactVerdict::Inconclusive;
  throw DomainError("unknown contact verdict " + s);
}

inline void to_json(json& j, const TheoremCPair& p) {
  j = json{{"k", p.k},
           {"xk", p.xk},
           {"zk", p.zk},
           {"xk_bundle", p.xk_bundle},
           {"zk_bundle", p.zk_bundle},
           {"hodge_differ", p.hodge_differ},
           {"contact_obstruction", to_string(p.contact_obstruction)}};
}
inline void from_json(const json& j, TheoremCPair& p) {
  j.at("k").get_to(p.k);
  j.at("xk").get_to(p.xk);
  j.at("zk").get_to(p.zk);
  j.at("xk_bundle").get_to(p.xk_bundle);
  j.at("zk_bundle").get_to(p.zk_bundle);
  j.at("hodge_differ").get_to(p.hodge_differ);
  p.contact_obstruction = contact_verdict_from_string(j.at("contact_obstruction"));
}

inline void to_json(json& j, const SpinTest& t) {
  j = json{{"spin", t.spin}, {"witness", t.witness}};
}
inline void from_json(const json& j, SpinTest& t) {
  j.at("spin").get_to(t.spin);
  j.at("witness").get_to(t.witness);
}

inline void to_json(json& j, const NonSpinEntry& e) {
  j = json{{"surface", e.surface},
           {"invariants", e.inv},
           {"euler_class", e.euler_class},
           {"bundle", e.bundle}};
}
inline void from_json(const json& j, NonSpinEntry& e) {
  j.at("surface").get_to(e.surface);
  j.at("invariants").get_to(e.inv);
  j.at("euler_class").get_to(e.euler_class);
  j.at("bundle").get_to(e.bundle);
}

inline void to_json(json& j, const NonSpinTuple& t) {
  j = json{{"search", t.search}, {"entries", t.entries}};
}
inline void from_json(const json& j, NonSpinTuple& t) {
  j.at("search").get_to(t.search);
  j.at("entries").get_to(t.entries);
}

inline void to_json(json& j, const CollisionKey& k) {
  j = json{{"d", k.d}, {"m", k.m}, {"e", k.e}, {"k_parity", k.k_parity}};
}
inline void from_json(const json& j, CollisionKey& k) {
  j.at("d").get_to(k.d);
  j.at("m").get_to(k.m);
  j.at("e").get_to(k.e);
  j.at("k_parity").get_to(k.k_parity);
}

inline void to_json(json& j, const CollisionMember& m) {
  j = json{{"degrees", m.degrees}, {"wall", m.wall}};
}
inline void from_json(const json& j, CollisionMember& m) {
  j.at("degrees").get_to(m.degrees);
  j.at("wall").get_to(m.wall);
}

inline void to_json(json& j, const CollisionGroup& g) {
  j = json{{"label", "Wall-equivalent candidates"}, {"key", g.key}, {"members", g.members}};
}
inline void from_json(const json& j, CollisionGroup& g) {
  j.at("key").get_to(g.key);
  j.at("members").get_to(g.members);
}

inline void to_json(json& j, const SevenDimReport& r) {
  j = json{{"dimension", r.dimension},
           {"fundamental_group_order", r.fundamental_group_order},
           {"simply_connected", r.simply_connected},
           {"first", r.first},
           {"second", r.second}};
}
inline void from_json(const json& j, SevenDimReport& r) {
  j.at("dimension").get_to(r.dimension);
  j.at("fundamental_group_order").get_to(r.fundamental_group_order);
  j.at("simply_connected").get_to(r.simply_connected);
  r.first = j.at("first").get<HodgeDiamond>();
  r.second = j.at("second").get<HodgeDiamond>();
}

inline void to_json(json& j, const HigherDimReport& r) {
  j = json{{"dimension", r.dimension}, {"first", r.first}, {"second", r.second}};
}
inline void from_json(const json& j, HigherDimReport& r) {
  j.at("dimension").get_to(r.dimension);
  r.first = j.at("first").get<HodgeDiamond>();
  r.second = j.at("second").get<HodgeDiamond>();
}

inline void to_json(json& j, const Table1Row& r) {
  j = json{{"q", r.q}, {"p", r.p}, {"c1sq", r.c1sq}, {"d_c1", r.d_c1}};
}
inline void from_json(const json& j, Table1Row& r) {
  j.at("q").get_to(r.q);
  j.at("p").get_to(r.p);
  j.at("c1sq").get_to(r.c1sq);
  j.at("d_c1").get_to(r.d_c1);
}

inline void to_json(json& j, const Table1Fixture& f) {
  j = json{{"q_list", f.q_list}, {"n", f.n}, {"rows", f.rows}};
}
inline void from_json(const json& j, Table1Fixture& f) {
  j.at("q_list").get_to(f.q_list);
  j.at("n").get_to(f.n);
  j.at("rows").get_to(f.rows);
}

inline void to_json(json& j, const Table2Row& r) {
  j = json{{"degrees", r.degrees}, {"d", r.d}, {"p1", r.p1}, {"euler", r.euler}, {"c1", r.c1}};
}
inline void from_json(const json& j, Table2Row& r) {
  j.at("degrees").get_to(r.degrees);
  j.at("d").get_to(r.d);
  j.at("p1").get_to(r.p1);
  j.at("euler").get_to(r.euler);
  j.at("c1").get_to(r.c1);
}

inline void to_json(json& j, const Table2Fixture& f) { j = json{{"rows", f.rows}}; }
inline void from_json(const json& j, Table2Fixture& f) { j.at("rows").get_to(f.rows); }

}  // namespace sasaki
