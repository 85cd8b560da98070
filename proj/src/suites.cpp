#include "infinilie/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <thread>

#include "infinilie/chart.hpp"
#include "infinilie/lie.hpp"
#include "infinilie/rotations.hpp"
#include "infinilie/sampling.hpp"

namespace infinilie {

namespace {

using Index = Eigen::Index;

struct Task {
  std::string id;
  std::function<std::vector<Check>()> run;
};

ValSeries R(const Rational& q) { return ValSeries(QuadExt(q)); }
ValSeries R(long p, long q = 1) { return R(make_rational(p, q)); }

Json triple_json(const ValSeries& x, const ValSeries& y, const ValSeries& z) {
  return {{"x", series_to_json(x)}, {"y", series_to_json(y)}, {"z", series_to_json(z)}};
}

template <class S>
bool entries_in_m(const Mat<S>& m) {
  for (Index k = 0; k < m.size(); ++k)
    if (classify(m.data()[k]) != Magnitude::IN_m) return false;
  return true;
}

template <class S>
bool equal_mod(const Mat<S>& a, const Mat<S>& b, Exponent g) {
  return equal<S>(truncated(a, g), truncated(b, g));
}

bool same_mod(const std::vector<ValSeries>& a, const std::vector<ValSeries>& b, Exponent g) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] - b[i]).truncated(g).is_zero()) return false;
  return true;
}

Json params_json(const std::vector<ValSeries>& t) {
  Json out = Json::array();
  for (const auto& x : t) out.push_back(to_expr(x));
  return out;
}

// Tan-half-angle parameter: a rational, sometimes shifted by an infinitesimal.
ValSeries random_param(Sampler& s) {
  ValSeries t = R(s.integer(-5, 5), s.integer(1, 5));
  if (s.coin()) t += s.infinitesimal();
  return t;
}

Quaternion random_unit(Sampler& s, bool standard) {
  const auto v = s.unit_vector4(standard);
  return {v[3], v[0], v[1], v[2]};
}

// Samples below keep coefficient heights small; rational arithmetic cost
// grows quickly with the size of numerators and denominators.
constexpr std::int64_t kSampleHeight = 4;

// Infinitesimal on the integer exponent grid with at most two terms.
ValSeries small_inf(Sampler& s) {
  const Exponent v(s.integer(1, 2));
  return s.series({v, v + Exponent(3), 1, 2, kSampleHeight, true});
}

// Unit quaternion with (w − 1, x, y, z) infinitesimal.
Quaternion near_one(Sampler& s) {
  const Axis v{small_inf(s), small_inf(s), small_inf(s)};
  const ValSeries n2 = dot(v, v);
  const ValSeries d = inv(ValSeries(1) + n2);
  return {(ValSeries(1) - n2) * d, ValSeries(2) * v[0] * d, ValSeries(2) * v[1] * d, ValSeries(2) * v[2] * d};
}

GaussSeriesMatrix su2_of(const Quaternion& q) {
  const GaussSeries i(GaussScalar::i());
  const GaussSeries w = to_gauss(q.w), x = to_gauss(q.x), y = to_gauss(q.y), z = to_gauss(q.z);
  GaussSeriesMatrix m(2, 2);
  m << w + i * x, y + i * z, -y + i * z, w - i * x;
  return m;
}

SeriesMatrix standard_rotation(Sampler& s) {
  return rho(R(s.integer(1, 5), s.integer(1, 5)), s.unit_vector(true, kSampleHeight));
}

SeriesMatrix so3_G00(Sampler& s) {
  const SeriesMatrix g = standard_rotation(s);
  const SeriesMatrix u = rho(small_inf(s), s.unit_vector(true, kSampleHeight)) *
                         rho(small_inf(s), s.unit_vector(true, kSampleHeight));
  return g * u * g.transpose();
}

GaussSeriesMatrix su2_G00(Sampler& s) {
  const auto v = s.unit_vector4(true, kSampleHeight);
  const GaussSeriesMatrix g = su2_of({v[3], v[0], v[1], v[2]});
  return g * su2_of(near_one(s)) * su2_of(near_one(s)) * adjoint<GaussSeries>(g);
}

// Group elements whose standard part is not the identity.
SeriesMatrix so3_outside(Sampler& s) { return standard_rotation(s) * so3_G00(s); }
GaussSeriesMatrix su2_outside(Sampler& s) {
  const auto v = s.unit_vector4(true, kSampleHeight);
  Quaternion q{v[3], v[0], v[1], v[2]};
  if (q.w == ValSeries(1)) q = {R(0), R(1), R(0), R(0)};
  return su2_of(q) * su2_G00(s);
}

SeriesMatrix small_so3(Sampler& s) {
  return skew({small_inf(s), small_inf(s), small_inf(s)});
}

GaussSeriesMatrix small_su2(Sampler& s) {
  const GaussSeries i(GaussScalar::i());
  const GaussSeries a = to_gauss(small_inf(s)), b = to_gauss(small_inf(s)),
                    c = to_gauss(small_inf(s));
  GaussSeriesMatrix x(2, 2);
  x << i * a, b + i * c, -b + i * c, -(i * a);
  return x;
}

// Skew matrix with at least one non-infinitesimal entry.
SeriesMatrix large_so3(Sampler& s) {
  Axis v{small_inf(s), small_inf(s), small_inf(s)};
  v[static_cast<std::size_t>(s.integer(0, 2))] += R(s.nonzero_rational(kSampleHeight));
  return skew(v);
}

GaussSeriesMatrix large_su2(Sampler& s) {
  GaussSeriesMatrix x = small_su2(s);
  const GaussSeries c(GaussScalar(QuadExt(s.nonzero_rational(kSampleHeight))));
  x(0, 1) += c;
  x(1, 0) -= c;
  return x;
}

// ---------------------------------------------------------------------------

std::vector<Task> field_axioms(const SuiteConfig& cfg) {
  const int n = cfg.count("field-axioms");
  const std::string g = cfg.trunc.str();
  const SeriesShape shape{Exponent(-1), Exponent(3), 2, 4, cfg.height, false};
  auto draw = [&cfg, shape](int k) {
    Sampler s(sub_seed(cfg.seed, "field-axioms", static_cast<std::uint64_t>(k)));
    const ValSeries x = s.series(shape), y = s.series(shape), z = s.series(shape);
    return std::array<ValSeries, 3>{x, y, z};
  };
  std::vector<Task> tasks;
  tasks.push_back({"field-axioms/ring", [=, &cfg] {
                     const std::string p = "field-axioms/";
                     Tally add_assoc(p + "add-assoc", g), add_comm(p + "add-comm", g), mul_assoc(p + "mul-assoc", g),
                         mul_comm(p + "mul-comm", g), distrib(p + "distributive", g), neg(p + "additive-inverse", g),
                         recip(p + "multiplicative-inverse", g), involution(p + "inverse-involution", g),
                         val_mul(p + "valuation-mul", g), val_add(p + "valuation-add", g);
                     const ValSeries fault = ValSeries::monomial(QuadExt(1), cfg.trunc - Exponent(1));
                     for (int k = 0; k < n; ++k) {
                       const auto [x, y, z] = draw(k);
                       auto w = [&] { return triple_json(x, y, z); };
                       add_assoc.record((x + y) + z == x + (y + z), w);
                       add_comm.record(x + y == (cfg.inject_fault ? y + x + fault : y + x), w);
                       mul_assoc.record((x * y) * z == x * (y * z), w);
                       mul_comm.record(x * y == y * x, w);
                       distrib.record(x * (y + z) == x * y + x * z, w);
                       neg.record((x + (-x)).is_zero(), w);
                       if (!x.is_zero()) {
                         const ValSeries xi = inv(x);
                         recip.record(x * xi == ValSeries(1), w);
                         involution.record(inv(xi) == x, w);
                       }
                       if (!x.is_zero() && !y.is_zero())
                         val_mul.record((x * y).valuation() == Valuation(x.order() + y.order()), w);
                       const ValSeries s = x + y;
                       const Valuation lo = std::min(x.valuation(), y.valuation());
                       const bool strict = x.valuation() != y.valuation();
                       val_add.record(s.valuation() >= lo && (!strict || s.valuation() == lo), w);
                     }
                     return std::vector<Check>{add_assoc.finish(), add_comm.finish(),  mul_assoc.finish(),
                                               mul_comm.finish(),  distrib.finish(),   neg.finish(),
                                               recip.finish(),     involution.finish(), val_mul.finish(),
                                               val_add.finish()};
                   }});
  tasks.push_back({"field-axioms/order", [=, &cfg] {
                     const std::string p = "field-axioms/";
                     Tally anti(p + "order-antisymmetry", g), trans(p + "order-transitive", g), plus(p + "order-add", g),
                         times(p + "order-mul", g), squares(p + "squares-nonnegative", g), ideal(p + "m-ideal", g);
                     auto lt = [](const ValSeries& a, const ValSeries& b) { return cmp(a, b) == SeriesOrder::LT; };
                     auto flip = [](SeriesOrder o) {
                       return o == SeriesOrder::LT ? SeriesOrder::GT : o == SeriesOrder::GT ? SeriesOrder::LT : o;
                     };
                     for (int k = 0; k < n; ++k) {
                       const auto [x, y, z] = draw(k);
                       auto w = [&] { return triple_json(x, y, z); };
                       anti.record(cmp(y, x) == flip(cmp(x, y)), w);
                       trans.record(!(lt(x, y) && lt(y, z)) || lt(x, z), w);
                       plus.record(!lt(x, y) || lt(x + z, y + z), w);
                       const ValSeries zero(0);
                       times.record(!(lt(zero, x) && lt(zero, y)) || lt(zero, x * y), w);
                       squares.record(sign(x * x) >= 0, w);
                       // 𝒪·𝔪 ⊆ 𝔪 with the finite part of x and the infinitesimal part of y.
                       std::vector<ValSeries::Term> fin, inf;
                       for (const auto& t : x.terms())
                         if (Exponent(0) <= t.exp) fin.push_back(t);
                       for (const auto& t : y.terms())
                         if (Exponent(0) < t.exp) inf.push_back(t);
                       const ValSeries o(fin, x.trunc()), m(inf, y.trunc());
                       if (!m.is_zero()) ideal.record(classify(o * m) == Magnitude::IN_m, w);
                     }
                     return std::vector<Check>{anti.finish(),  trans.finish(),   plus.finish(),
                                               times.finish(), squares.finish(), ideal.finish()};
                   }});
  tasks.push_back({"field-axioms/epsilon", [=, &cfg] {
                     Tally t("field-axioms/epsilon-below-rationals", g);
                     Sampler s(sub_seed(cfg.seed, "epsilon", 0));
                     const ValSeries e = ValSeries::epsilon();
                     t.record(sign(e) == 1);
                     for (int k = 0; k < 20; ++k) {
                       // Positive rationals spread down to 10⁻¹².
                       mpz_class den;
                       mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(12 * k / 19));
                       const Rational q = make_rational(k == 19 ? 1 : s.integer(1, 9), den);
                       t.record(cmp(e, R(q)) == SeriesOrder::LT, [&] { return Json{{"q", to_string(q)}}; });
                     }
                     return std::vector<Check>{t.finish()};
                   }});
  return tasks;
}

std::vector<Task> standard_part_suite(const SuiteConfig& cfg) {
  const int n = cfg.count("standard-part");
  const std::string g = cfg.trunc.str();
  return {{"standard-part", [=, &cfg] {
             const std::string p = "standard-part/";
             Tally add(p + "st-add", g), mul(p + "st-mul", g), one(p + "st-one", g), outside(p + "outside-O-error", g),
                 cls(p + "classify-consistent", g), recip(p + "inverse-of-m-unbounded", g);
             const SeriesShape in_o{Exponent(0), Exponent(4), 2, 4, cfg.height, false};
             one.record(standard_part(ValSeries(1)) == QuadExt(1));
             for (int k = 0; k < n; ++k) {
               Sampler s(sub_seed(cfg.seed, "standard-part", static_cast<std::uint64_t>(k)));
               const ValSeries x = s.series(in_o), y = s.series(in_o);
               auto w = [&] { return Json{{"x", series_to_json(x)}, {"y", series_to_json(y)}}; };
               add.record(standard_part(x + y) == standard_part(x) + standard_part(y), w);
               mul.record(standard_part(x * y) == standard_part(x) * standard_part(y), w);
               cls.record((classify(x) == Magnitude::IN_m) == is_zero(standard_part(x)), w);
               const Exponent neg(-s.integer(1, 4), 2);
               const ValSeries big = s.series({neg, Exponent(3), 2, 3, cfg.height, true});
               bool threw = false;
               try {
                 (void)standard_part(big);
               } catch (const DomainError&) {
                 threw = true;
               }
               outside.record(threw, [&] { return Json{{"x", series_to_json(big)}}; });
               const ValSeries m = s.infinitesimal(cfg.height);
               recip.record(classify(inv(m)) == Magnitude::OUTSIDE_O, [&] { return Json{{"m", series_to_json(m)}}; });
             }
             return std::vector<Check>{add.finish(), mul.finish(), one.finish(), outside.finish(), cls.finish(),
                                       recip.finish()};
           }}};
}

const char* const kRelationAlgebras[] = {"so3", "so5", "su2", "su3"};

std::vector<Task> so3_relations(const SuiteConfig&) {
  std::vector<Task> tasks;
  tasks.push_back({"so3-relations/standard", [] {
                     Tally so3("so3-relations/triple/standard-so3", "exact"), su2("so3-relations/triple/standard-su2", "exact");
                     so3.record(triple_relations_hold(standard_so3_triple()));
                     su2.record(triple_relations_hold(standard_su2_triple()));
                     return std::vector<Check>{so3.finish(), su2.finish()};
                   }});
  for (const char* name : kRelationAlgebras) {
    const std::string alg = name;
    tasks.push_back({"so3-relations/" + alg, [alg] {
                       const LieAlgebra g = build_algebra(alg);
                       const RootDatum rd = root_decomposition(g);
                       Tally triple("so3-relations/triple/" + alg, "exact"), cartan("so3-relations/cartan-action/" + alg, "exact");
                       const GaussScalar i = GaussScalar::i();
                       for (std::size_t r = 0; r < rd.roots.size(); ++r) {
                         const Root& root = rd.roots[r];
                         const RootUV uv = uv_from_root(rd, r);
                         triple.record(triple_relations_hold(normalize_triple(uv)), [&] { return Json{{"root", root.label}}; });
                         for (std::size_t k = 0; k < rd.cartan.size(); ++k) {
                           const ExactMatrix& h = rd.cartan[k];
                           const GaussScalar ia = i * root.values[k];
                           const bool ok = equal<GaussScalar>(bracket(h, uv.U), ia * uv.V) &&
                                           equal<GaussScalar>(bracket(h, uv.V), -ia * uv.U);
                           cartan.record(ok, [&] { return Json{{"root", root.label}, {"cartan", k}}; });
                         }
                       }
                       return std::vector<Check>{triple.finish(), cartan.finish()};
                     }});
  }
  return tasks;
}

const char* const kRootAlgebras[] = {"so3", "so5", "so6", "so7", "su2", "su3", "su4"};

std::vector<Task> root_triples(const SuiteConfig&) {
  std::vector<Task> tasks;
  for (const char* name : kRootAlgebras) {
    const std::string alg = name;
    tasks.push_back({"root-triples/" + alg, [alg] {
                       const std::string p = "root-triples/" + alg + "/";
                       const LieAlgebra g = build_algebra(alg);
                       const RootDatum rd = root_decomposition(g);
                       Tally datum(p + "datum", "exact"), real(p + "uv-real", "exact"), neg(p + "negativity", "exact"),
                           norm(p + "normalized-triple", "exact");
                       const RootDatumChecks c = check_root_datum(g, rd);
                       datum.record(c.all(), [&] {
                         return Json{{"eigen", c.eigen}, {"imaginary", c.imaginary}, {"paired", c.paired},
                                     {"spans", c.spans}, {"reduced", c.reduced},     {"dimension", c.dimension}};
                       });
                       datum.set_detail(std::to_string(rd.roots.size()) + " roots, rank " +
                                        std::to_string(rd.cartan.size()));
                       for (std::size_t r = 0; r < rd.roots.size(); ++r) {
                         auto w = [&] { return Json{{"root", rd.roots[r].label}}; };
                         const RootUV uv = uv_from_root(rd, r);
                         real.record(in_real_form(uv.U) && in_real_form(uv.V), w);
                         neg.record(negativity_check(rd, r) == -1, w);
                         norm.record(triple_relations_hold(normalize_triple(uv)), w);
                       }
                       return std::vector<Check>{datum.finish(), real.finish(), neg.finish(), norm.finish()};
                     }});
  }
  tasks.push_back({"root-triples/so4", [] {
                     Tally t("root-triples/so4/non-simple-rejected", "exact");
                     const LieAlgebra g = build_algebra("so4");
                     bool threw = false;
                     try {
                       (void)verify_lemma_so3(g, root_decomposition(g), 0);
                     } catch (const DomainError&) {
                       threw = true;
                     }
                     t.record(!g.simple && threw);
                     return std::vector<Check>{t.finish()};
                   }});
  return tasks;
}

const char* const kLemmaAlgebras[] = {"so3", "so5", "su3"};

std::vector<Task> lemma_so3(const SuiteConfig&) {
  std::vector<Task> tasks;
  for (const char* name : kLemmaAlgebras) {
    const std::string alg = name;
    tasks.push_back({"lemma-so3/" + alg, [alg] {
                       const LieAlgebra g = build_algebra(alg);
                       const RootDatum rd = root_decomposition(g);
                       std::vector<std::string> order;
                       std::map<std::string, Tally> tallies;
                       Json certs = Json::array();
                       for (std::size_t r = 0; r < rd.roots.size(); ++r) {
                         const LemmaReport rep = verify_lemma_so3(g, rd, r);
                         certs.push_back(lemma_certificate(rep));
                         for (const LemmaCheck& c : rep.checks) {
                           auto it = tallies.find(c.name);
                           if (it == tallies.end()) {
                             order.push_back(c.name);
                             it = tallies.emplace(c.name, Tally("lemma-so3/" + alg + "/" + c.name, "exact")).first;
                           }
                           it->second.record(c.pass, [&] {
                             return Json{{"root", rep.root}, {"dims", {c.dim_lhs, c.dim_rhs}}};
                           });
                         }
                       }
                       std::vector<Check> out;
                       for (const auto& name : order) out.push_back(tallies.at(name).finish());
                       Tally all("lemma-so3/" + alg + "/certificates", "exact");
                       all.record(std::all_of(out.begin(), out.end(), [](const Check& c) { return c.status == Status::Pass; }));
                       all.set_certificate(certs);
                       out.push_back(all.finish());
                       return out;
                     }});
  }
  tasks.push_back({"lemma-so3/so4", [] {
                     Tally t("lemma-so3/so4-rejected", "exact");
                     const LieAlgebra g = build_algebra("so4");
                     bool threw = false;
                     try {
                       (void)verify_lemma_so3(g, root_decomposition(g), 0);
                     } catch (const DomainError&) {
                       threw = true;
                     }
                     t.record(threw);
                     return std::vector<Check>{t.finish()};
                   }});
  return tasks;
}

std::vector<Task> rho_equivariance(const SuiteConfig& cfg) {
  const int n = cfg.count("rho-equivariance");
  const std::string g = cfg.trunc.str();
  return {{"rho-equivariance", [=, &cfg] {
             const std::string p = "rho-equivariance/";
             Tally conj(p + "conjugation", g), group(p + "in-SO3", g), small(p + "G00-iff-infinitesimal", g);
             const GroupSpec so3 = GroupSpec::so(3);
             for (int k = 0; k < n; ++k) {
               Sampler s(sub_seed(cfg.seed, "rho-equivariance", static_cast<std::uint64_t>(k)));
               const ValSeries t = s.coin() ? random_param(s) : s.infinitesimal(kSampleHeight);
               const Axis L = s.unit_vector(s.coin());
               const SeriesMatrix h = s.coin() ? rho(random_param(s), s.unit_vector(s.coin())) : spin_pi(random_unit(s, s.coin()));
               auto w = [&] { return Json{{"t", to_expr(t)}, {"axis", axis_to_json(L)}, {"g", matrix_to_json<ValSeries>(h)}}; };
               conj.record(conj_equivariance_check(t, L, h), w);
               const SeriesMatrix r = rho(t, L);
               group.record(in_group<ValSeries>(so3, r), w);
               small.record(in_G00<ValSeries>(so3, r) == (classify(t) == Magnitude::IN_m), w);
             }
             return std::vector<Check>{conj.finish(), group.finish(), small.finish()};
           }}};
}

std::vector<Task> spin_cover(const SuiteConfig& cfg) {
  const int n = cfg.count("spin-cover");
  const int half = std::max(1, n / 2);
  const std::string g = cfg.trunc.str();
  return {{"spin-cover", [=, &cfg] {
             const std::string p = "spin-cover/";
             Tally hom(p + "homomorphism", g), kernel(p + "kernel", g), adj(p + "adjoint", g), id(p + "identity", g),
                 small(p + "infinitesimal-isomorphism", g);
             const GroupSpec so3 = GroupSpec::so(3);
             id.record(is_identity<ValSeries>(spin_pi(Quaternion::one())));
             for (int k = 0; k < n; ++k) {
               Sampler s(sub_seed(cfg.seed, "spin-cover", static_cast<std::uint64_t>(k)));
               const Quaternion a = random_unit(s, s.coin()), b = random_unit(s, s.coin());
               auto w = [&] { return Json{{"p", quaternion_to_json(a)}, {"q", quaternion_to_json(b)}}; };
               hom.record(equal<ValSeries>(spin_pi(a * b), spin_pi(a) * spin_pi(b)), w);
               if (k >= half) continue;
               kernel.record(equal<ValSeries>(spin_pi(-b), spin_pi(b)), w);
               // Coordinates in the basis {H, U, V} = (L₁, L₂, L₃): Ad_π(q) acts by the matrix π(q).
               const SeriesMatrix m = spin_pi(a);
               const Axis v{s.series({Exponent(0), Exponent(3), 2, 3, cfg.height, false}), R(s.rational(cfg.height)),
                            s.infinitesimal(cfg.height)};
               adj.record(unskew(m * skew(v) * m.transpose()) == mat_vec(m, v), w);
               const Quaternion u = near_one(s), u2 = near_one(s);
               const SeriesMatrix pu = spin_pi(u);
               small.record(in_G00<ValSeries>(so3, pu) && (u == u2 || !equal<ValSeries>(pu, spin_pi(u2))),
                            [&] { return Json{{"p", quaternion_to_json(u)}, {"q", quaternion_to_json(u2)}}; });
             }
             return std::vector<Check>{hom.finish(), kernel.finish(), adj.finish(), id.finish(), small.finish()};
           }}};
}

std::vector<Task> quaternion_facts(const SuiteConfig& cfg) {
  const int n = cfg.count("quaternion-facts");
  const std::string g = cfg.trunc.str();
  return {{"quaternion-facts", [=, &cfg] {
             const std::string p = "quaternion-facts/";
             Tally ineq(p + "scalar-part-inequality", g), iff(p + "equality-iff-equal", g), conj(p + "conjugation-invariance", g);
             for (int k = 0; k < n; ++k) {
               Sampler s(sub_seed(cfg.seed, "quaternion-facts", static_cast<std::uint64_t>(k)));
               const Quaternion a = random_unit(s, s.coin());
               Quaternion b = a;
               if (k % 8 != 0) {
                 // Same scalar part: rotate the vector part.
                 const Axis v = mat_vec(rho(random_param(s), s.unit_vector(s.coin())), a.vec());
                 b = {a.w, v[0], v[1], v[2]};
               }
               const Quaternion q = random_unit(s, s.coin());
               const ScalarPartReport r = scalar_part_facts(a, b, {q});
               if (r.skipped) {
                 ineq.skip();
                 continue;
               }
               auto w = [&] {
                 return Json{{"a", quaternion_to_json(a)}, {"b", quaternion_to_json(b)}, {"q", quaternion_to_json(q)}};
               };
               ineq.record(r.inequality, w);
               iff.record(r.equality_iff, w);
               conj.record(r.conjugation, w);
             }
             return std::vector<Check>{ineq.finish(), iff.finish(), conj.finish()};
           }}};
}

std::vector<Task> commutator_width(const SuiteConfig& cfg) {
  const int n = cfg.count("commutator-width");
  return {{"commutator-width", [=, &cfg] {
             const std::string p = "commutator-width/";
             Tally res(p + "residual", cfg.trunc.str()), mem(p + "factors-in-G00", cfg.trunc.str());
             const GroupSpec so3 = GroupSpec::so(3);
             const Exponent vals[] = {Exponent(1, 2), Exponent(1), Exponent(3, 2), Exponent(2)};
             Exponent grade = cfg.trunc;
             for (int k = 0; k < n; ++k) {
               Sampler s(sub_seed(cfg.seed, "commutator-width", static_cast<std::uint64_t>(k)));
               const SeriesMatrix target = rho(s.infinitesimal(vals[k % 4], cfg.height), s.unit_vector(s.coin()));
               const CommutatorSolution sol = commutator_solve(target);
               grade = min(grade, sol.grade);
               auto w = [&] { return Json{{"target", matrix_to_json<ValSeries>(target)}}; };
               const SeriesMatrix comm = sol.a * sol.b * sol.a.transpose() * sol.b.transpose();
               res.record(equal_mod<ValSeries>(comm, target, sol.grade), w);
               mem.record(in_G00<ValSeries>(so3, sol.a) && in_G00<ValSeries>(so3, sol.b), w);
             }
             res.set_grade(grade.str());
             return std::vector<Check>{res.finish(), mem.finish()};
           }}};
}

std::vector<Task> symmetric_interval(const SuiteConfig& cfg) {
  const int n = cfg.count("symmetric-interval");
  return {{"symmetric-interval", [=, &cfg] {
             const std::string p = "symmetric-interval/";
             const std::string g = cfg.trunc.str();
             Sampler s(sub_seed(cfg.seed, "symmetric-interval", 0));
             const SeriesMatrix base = rho(s.series({Exponent(1), Exponent(4), 1, 2, kSampleHeight, true}), s.unit_vector(true, kSampleHeight));
             const IntervalProbeReport r = symmetric_interval_probe(base, n, sub_seed(cfg.seed, "symmetric-interval", 1));
             const Json w{{"g", matrix_to_json<ValSeries>(base)}};
             Tally bound(p + "g-squared-bound", g), qbound(p + "quaternion-bound", g), sym(p + "inversion-symmetric", g),
                 ident(p + "contains-identity", g), sq(p + "g-squared-recorded", g);
             bound.add(r.recorded, r.violations);
             qbound.add(r.recorded, r.quaternion_violations);
             bound.set_detail(std::to_string(r.recorded) + " products recorded from " + std::to_string(r.samples) +
                              " samples; bound " + to_expr(r.bound) + ", least " + to_expr(r.smallest));
             sym.record(r.symmetric, [&] { return w; });
             ident.record(r.contains_identity, [&] { return w; });
             sq.record(r.g_squared_recorded, [&] { return w; });
             return std::vector<Check>{bound.finish(), qbound.finish(), sym.finish(), ident.finish(), sq.finish()};
           }}};
}

const Axis& chart_axis() {
  static const Axis a{R(3, 5), R(0), R(4, 5)};
  return a;
}

template <class S>
std::vector<ValSeries> chart_params(Sampler& s, const ChartData<S>& cd, std::int64_t height) {
  std::vector<ValSeries> t;
  for (std::size_t i = 0; i < cd.conjugators.size(); ++i)
    t.push_back(s.infinitesimal(cd.det_val + (s.coin() ? Exponent(1, 2) : Exponent(1)), height));
  return t;
}

template <class S>
std::vector<Check> chart_roundtrip_for(const SuiteConfig& cfg, const GroupSpec& spec, int trips, int firsts) {
  const std::string p = "chart-roundtrip/" + spec.name() + "/";
  const ArcJ<S> arc = make_arc<S>(spec, chart_axis());
  const ChartData<S> cd = find_conjugators<S>(spec, arc, sub_seed(cfg.seed, "chart", 0), std::min<std::int64_t>(cfg.height, 5));
  const Exponent expected = cd.trunc - cd.det_val * Exponent(2);
  Tally cert(p + "certificate", cd.trunc.str()), trip(p + "solve-after-phi", expected.str()),
      back(p + "phi-after-solve", expected.str()), first(p + "phi-first-coordinate", cd.trunc.str());
  cert.record(cd.det_val * Exponent(2) < cd.trunc && Exponent(0) < cd.det_val);
  cert.set_detail("det_val " + cd.det_val.str() + " after " + std::to_string(cd.attempts) + " attempts");
  cert.set_certificate(chart_certificate(cd));
  for (int k = 0; k < trips; ++k) {
    Sampler s(sub_seed(cfg.seed, p, static_cast<std::uint64_t>(k)));
    const std::vector<ValSeries> t = chart_params(s, cd, 5);
    const Mat<S> u = chart_phi(cd, t);
    const ChartSolution sol = chart_solve(cd, u);
    auto w = [&] { return Json{{"t", params_json(t)}}; };
    trip.record(sol.grade == expected && same_mod(sol.t, t, sol.grade), w);
    back.record(equal_mod<S>(chart_phi(cd, sol.t), u, sol.grade), w);
  }
  for (int k = 0; k < firsts; ++k) {
    Sampler s(sub_seed(cfg.seed, p + "first", static_cast<std::uint64_t>(k)));
    std::vector<ValSeries> t(cd.conjugators.size(), ValSeries(0));
    t[0] = s.infinitesimal(cfg.height);
    const Mat<S> x = arc.point(t[0]);
    bool ok = equal<S>(chart_phi(cd, t), x);
    if constexpr (std::is_same_v<S, ValSeries>) ok = ok && equal<ValSeries>(x, rho(t[0], chart_axis()));
    first.record(ok, [&] { return Json{{"x", to_expr(t[0])}}; });
  }
  return {cert.finish(), trip.finish(), back.finish(), first.finish()};
}

std::vector<Task> chart_roundtrip(const SuiteConfig& cfg) {
  const int n = cfg.count("chart-roundtrip");
  const int so3_trips = (n + 1) / 2, su2_trips = std::max(1, n / 2);
  return {{"chart-roundtrip/so3", [=, &cfg] { return chart_roundtrip_for<ValSeries>(cfg, GroupSpec::so(3), so3_trips, 10); }},
          {"chart-roundtrip/su2", [=, &cfg] { return chart_roundtrip_for<GaussSeries>(cfg, GroupSpec::su(2), su2_trips, 10); }}};
}

std::vector<Task> star_pullback(const SuiteConfig& cfg) {
  const int n = cfg.count("star-pullback");
  return {{"star-pullback", [=, &cfg] {
             const std::string p = "star-pullback/";
             const GroupSpec so3 = GroupSpec::so(3);
             const ChartData<ValSeries> cd = find_conjugators<ValSeries>(so3, make_arc<ValSeries>(so3, chart_axis()),
                                                                         sub_seed(cfg.seed, "chart", 0), 5);
             const Exponent grade = cd.trunc - cd.det_val * Exponent(2);
             Tally ident(p + "identity", grade.str()), inverse(p + "inverse", grade.str()), assoc(p + "associativity", grade.str());
             const std::vector<ValSeries> zero(cd.conjugators.size(), ValSeries(0));
             // Integer exponent grid keeps the nested solves cheap.
             auto params = [&](Sampler& s) {
               std::vector<ValSeries> t;
               for (std::size_t i = 0; i < cd.conjugators.size(); ++i)
                 t.push_back(s.series({cd.det_val + Exponent(1), cd.det_val + Exponent(4), 1, 2, kSampleHeight, true}));
               return t;
             };
             for (int k = 0; k < n; ++k) {
               Sampler s(sub_seed(cfg.seed, "star-pullback", static_cast<std::uint64_t>(k)));
               const auto a = params(s), b = params(s), c = params(s);
               auto w = [&] { return Json{{"a", params_json(a)}, {"b", params_json(b)}, {"c", params_json(c)}}; };
               ident.record(same_mod(star(cd, a, zero).t, a, grade), w);
               const ChartSolution ainv = chart_solve(cd, SeriesMatrix(chart_phi(cd, a).transpose()));
               inverse.record(same_mod(star(cd, a, ainv.t).t, zero, grade), w);
               const ChartSolution ab = star(cd, a, b), bc = star(cd, b, c);
               assoc.record(same_mod(star(cd, ab.t, c).t, star(cd, a, bc.t).t, grade), w);
             }
             return std::vector<Check>{ident.finish(), inverse.finish(), assoc.finish()};
           }}};
}

template <class S>
std::vector<Check> cayley_psi_for(const SuiteConfig& cfg, const GroupSpec& spec, int n) {
  const std::string p = "cayley-psi/" + spec.name() + "/";
  const std::string g = cfg.trunc.str();
  Tally fwd(p + "m-entries-into-G00", g), bwd(p + "G00-into-m-entries", g), equiv(p + "predicate-equivalence", g),
      round(p + "round-trip", g);
  constexpr bool complex = std::is_same_v<S, GaussSeries>;
  auto small = [](Sampler& s) {
    if constexpr (complex) return small_su2(s); else return small_so3(s);
  };
  auto large = [](Sampler& s) {
    if constexpr (complex) return large_su2(s); else return large_so3(s);
  };
  auto inside = [](Sampler& s) {
    if constexpr (complex) return su2_G00(s); else return so3_G00(s);
  };
  auto outside = [](Sampler& s) {
    if constexpr (complex) return su2_outside(s); else return so3_outside(s);
  };
  for (int k = 0; k < n; ++k) {
    Sampler s(sub_seed(cfg.seed, p, static_cast<std::uint64_t>(k)));
    const Mat<S> x = small(s);
    const Mat<S> cx = cayley<S>(x);
    fwd.record(in_G00<S>(spec, cx), [&] { return Json{{"X", matrix_to_json<S>(x)}}; });
    round.record(equal<S>(cayley_inv<S>(cx), x), [&] { return Json{{"X", matrix_to_json<S>(x)}}; });

    const Mat<S> u = inside(s);
    const Mat<S> y = cayley_inv<S>(u);
    bwd.record(in_G00<S>(spec, u) && is_zero<S>(Mat<S>(y + adjoint<S>(y))) && entries_in_m(y),
               [&] { return Json{{"u", matrix_to_json<S>(u)}}; });

    // Mixed samples on both sides of the chart.
    if (s.coin()) {
      const Mat<S> v = s.coin() ? inside(s) : outside(s);
      try {
        equiv.record(in_G00<S>(spec, v) == entries_in_m(cayley_inv<S>(v)), [&] { return Json{{"u", matrix_to_json<S>(v)}}; });
      } catch (const DomainError&) {
        equiv.skip();  // −I and its relatives lie outside the chart domain
      }
    } else {
      const Mat<S> z = s.coin() ? small(s) : large(s);
      equiv.record(in_G00<S>(spec, cayley<S>(z)) == entries_in_m(z), [&] { return Json{{"X", matrix_to_json<S>(z)}}; });
    }
  }
  return {fwd.finish(), bwd.finish(), equiv.finish(), round.finish()};
}

std::vector<Task> cayley_psi(const SuiteConfig& cfg) {
  const int n = cfg.count("cayley-psi");
  return {{"cayley-psi/so3", [=, &cfg] { return cayley_psi_for<ValSeries>(cfg, GroupSpec::so(3), n); }},
          {"cayley-psi/su2", [=, &cfg] { return cayley_psi_for<GaussSeries>(cfg, GroupSpec::su(2), n); }}};
}

std::vector<Task> product_law(const SuiteConfig& cfg) {
  const int n = cfg.count("product-law");
  return {{"product-law", [=, &cfg] {
             const std::string g = cfg.trunc.str();
             Tally eq("product-law/SO(3)xSU(2)", g), shape("product-law/shape-mismatch-rejected", g);
             const GroupSpec so3 = GroupSpec::so(3), su2 = GroupSpec::su(2);
             int both = 0;
             for (int k = 0; k < n; ++k) {
               Sampler s(sub_seed(cfg.seed, "product-law", static_cast<std::uint64_t>(k)));
               const bool a_in = s.coin(), b_in = s.coin();
               const SeriesMatrix a = a_in ? so3_G00(s) : so3_outside(s);
               const GaussSeriesMatrix b = b_in ? su2_G00(s) : su2_outside(s);
               const GaussSeriesMatrix m = block_diag<GaussSeries>(to_gauss(a), b);
               const auto [whole, blocks] = product_G00_check(so3, su2, m);
               both += whole ? 1 : 0;
               eq.record(whole == blocks && whole == (a_in && b_in), [&] { return Json{{"M", matrix_to_json<GaussSeries>(m)}}; });
             }
             eq.set_detail(std::to_string(both) + " samples inside the product G00");
             bool threw = false;
             try {
               (void)product_G00_check(so3, su2, identity<GaussSeries>(4));
             } catch (const DomainError&) {
               threw = true;
             }
             shape.record(threw);
             return std::vector<Check>{eq.finish(), shape.finish()};
           }}};
}

std::vector<Task> adjoint_embedding(const SuiteConfig& cfg) {
  const int n = cfg.count("adjoint-embedding");
  return {{"adjoint-embedding", [=, &cfg] {
             const std::string p = "adjoint-embedding/SO(5)/";
             const std::string g = cfg.trunc.str();
             const AdjointReport r = adjoint_embedding_check(GroupSpec::so(5), n, sub_seed(cfg.seed, "adjoint-embedding", 0));
             Tally id(p + "identity", g), hom(p + "homomorphism", g), dist(p + "distinct-images", g), tor(p + "torsion-free", g);
             id.record(r.identity_ok);
             hom.add(r.samples, r.hom_failures);
             dist.add(r.samples, r.distinct_failures);
             tor.add(r.samples, r.torsion_failures);
             return std::vector<Check>{id.finish(), hom.finish(), dist.finish(), tor.finish()};
           }}};
}

using SuiteFn = std::vector<Task> (*)(const SuiteConfig&);

const std::vector<std::pair<std::string, std::pair<SuiteFn, int>>>& registry() {
  static const std::vector<std::pair<std::string, std::pair<SuiteFn, int>>> r = {
      {"field-axioms", {field_axioms, 1000}},
      {"standard-part", {standard_part_suite, 500}},
      {"so3-relations", {so3_relations, 1}},
      {"rho-equivariance", {rho_equivariance, 200}},
      {"spin-cover", {spin_cover, 200}},
      {"quaternion-facts", {quaternion_facts, 500}},
      {"commutator-width", {commutator_width, 50}},
      {"symmetric-interval", {symmetric_interval, 500}},
      {"root-triples", {root_triples, 1}},
      {"lemma-so3", {lemma_so3, 1}},
      {"chart-roundtrip", {chart_roundtrip, 50}},
      {"star-pullback", {star_pullback, 25}},
      {"adjoint-embedding", {adjoint_embedding, 100}},
      {"cayley-psi", {cayley_psi, 200}},
      {"product-law", {product_law, 200}},
  };
  return r;
}

const std::pair<SuiteFn, int>* lookup(const std::string& name) {
  for (const auto& [n, entry] : registry())
    if (n == name) return &entry;
  return nullptr;
}

// Runs tasks on a small pool; each worker installs the suite context.
std::vector<Check> run_tasks(const std::vector<Task>& tasks, const SuiteConfig& cfg, bool& precision) {
  std::vector<std::vector<Check>> results(tasks.size());
  std::vector<char> exhausted(tasks.size(), 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    const ContextGuard guard(cfg.context());
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        results[i] = tasks[i].run();
      } catch (const PrecisionError& e) {
        Check c;
        c.id = tasks[i].id;
        c.status = Status::Skip;
        c.grade = cfg.trunc.str();
        c.detail = std::string("precision exhausted: ") + e.what();
        results[i] = {c};
        exhausted[i] = 1;
      } catch (const Error& e) {
        Check c;
        c.id = tasks[i].id;
        c.status = Status::Fail;
        c.grade = cfg.trunc.str();
        c.detail = std::string("error: ") + e.what();
        results[i] = {c};
      }
    }
  };
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min<std::size_t>(hw, tasks.size());
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::vector<Check> out;
  for (auto& r : results) std::move(r.begin(), r.end(), std::back_inserter(out));
  precision = std::any_of(exhausted.begin(), exhausted.end(), [](char c) { return c != 0; });
  std::sort(out.begin(), out.end(), [](const Check& a, const Check& b) { return a.id < b.id; });
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& e : registry()) v.push_back(e.first);
    return v;
  }();
  return names;
}

int default_samples(const std::string& suite) {
  const auto* e = lookup(suite);
  if (!e) throw DomainError("unknown suite: " + suite);
  return e->second;
}

int SuiteConfig::count(const std::string& suite) const {
  const auto it = samples.find(suite);
  return it == samples.end() ? default_samples(suite) : it->second;
}

Context SuiteConfig::context() const { return Context{trunc, ramification, 1}; }

void SuiteConfig::validate() const {
  if (trunc < Exponent(4)) throw ConfigError("trunc must be at least 4, got " + trunc.str());
  if (ramification < 1) throw ConfigError("ramification must be positive");
  if (trunc.den() > ramification) throw ConfigError("trunc denominator exceeds the ramification bound");
  if (height < 1) throw ConfigError("height must be positive");
  for (const auto& [name, n] : samples) {
    if (!lookup(name)) throw ConfigError("unknown suite in sample counts: " + name);
    if (n < 1) throw ConfigError("sample count for " + name + " must be at least 1");
  }
}

Report run_suite(const std::string& name, const SuiteConfig& config) {
  const auto* entry = lookup(name);
  if (!entry) throw DomainError("unknown suite: " + name);
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  Report r;
  r.suite = name;
  r.seed = config.seed;
  r.trunc = config.trunc.str();
  const std::vector<Task> tasks = [&] {
    const ContextGuard guard(config.context());
    return entry->first(config);
  }();
  r.checks = run_tasks(tasks, config, r.precision_exhausted);
  r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace infinilie
