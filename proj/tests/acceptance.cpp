// Acceptance run: one PASS/FAIL line per criterion, diagnostics indented
// beneath it. Exit status is the number of failing criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "koszulq/findim.hpp"
#include "koszulq/structure.hpp"
#include "rewriting_oracle.hpp"
#include "support.hpp"

using namespace kq;

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass = true;
  std::vector<std::string> notes;
  void fail(const std::string& why) {
    pass = false;
    notes.push_back(why);
  }
  void note(const std::string& what) { notes.push_back(what); }
};

int failures = 0;

void criterion(int k, const std::string& title, double budget_s, const std::function<void(Verdict&)>& body) {
  Verdict v;
  const auto start = Clock::now();
  try {
    body(v);
  } catch (const std::exception& e) {
    v.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (secs > budget_s) v.fail("took " + std::to_string(secs) + " s, budget " + std::to_string(budget_s) + " s");
  std::ostringstream line;
  line.precision(1);
  line << std::fixed << "[" << k << "] " << (v.pass ? "PASS" : "FAIL") << "  " << title << "  (" << secs << " s)";
  std::cout << line.str() << "\n";
  for (const auto& n : v.notes) std::cout << "      " << n << "\n";
  std::cout.flush();
  if (!v.pass) ++failures;
}

std::string q_string(const QParams& P) {
  std::string s = "(";
  for (int i = 0; i < P.m(); ++i) s += (i ? ", " : "") + P.q()[i].short_string();
  return s + ")";
}

QParamsHandle generic_q(int m) {
  auto U = make_field(FieldSpec::rational_function());
  std::vector<Scalar> q(m, U->one());
  q[0] = U->generator();
  return QParams::make(U, q);
}

std::vector<Scalar> random_rational_q(int m, std::mt19937_64& rng) {
  std::vector<Scalar> q;
  for (int i = 0; i < m; ++i) q.push_back(test::small_unit(test::rationals(), rng));
  return q;
}

RescalingAssignment normalization(const QParams& P) {
  RescalingAssignment r;
  Scalar prefix = P.field()->one();
  for (int i = 0; i < P.m(); ++i) {
    prefix *= P.q_at(i);
    r.lambda.push_back(prefix);
    r.mu.push_back(P.field()->one());
  }
  return r;
}

struct GridInstance {
  int m;
  unsigned d;
  int tuple;
  QParamsHandle params;
  StructureReport report;
};

std::vector<GridInstance> grid;

}  // namespace

int main() {
  std::cout << "acceptance criteria (exact arithmetic, zero tolerance)\n";

  criterion(1, "structure-theorem grid, m in 1..5, d in {1,2,3,4,6}, 3 tuples each", 90 * 60, [](Verdict& v) {
    std::mt19937_64 rng(20240601);
    int passed = 0, derived_only = 0;
    double slowest = 0;
    for (int m = 1; m <= 5; ++m)
      for (unsigned d : {1u, 2u, 3u, 4u, 6u})
        for (int tuple = 0; tuple < 3; ++tuple) {
          const auto P = test::random_q_with_order(m, d, rng);
          const long long N = default_degree_bound(*P);
          const auto t0 = Clock::now();
          auto rep = verify_structure_theorem(P, N);
          const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
          slowest = std::max(slowest, secs);
          if (secs > 120) v.fail("m=" + std::to_string(m) + " d=" + std::to_string(d) + " exceeded 2 minutes");
          if (rep.pass) {
            ++passed;
          } else {
            const bool other_ok = rep.x_central && rep.y_central && rep.w_central && rep.dims_match;
            const bool derived_ok = rep.derived_relation && rep.derived_relation->holds;
            if (other_ok && derived_ok) ++derived_only;
            std::ostringstream os;
            os << "m=" << m << " d=" << d << " q=" << q_string(*P) << " case=" << case_name(rep.tag)
               << ": printed eps " << rep.generators->epsilon.short_string() << " fails w^p = eps x y; derived eps "
               << rep.generators->epsilon_derived.short_string() << (derived_ok ? " holds" : " also fails")
               << (other_ok ? "; centrality and dims match" : "; OTHER CHECKS FAIL");
            v.fail(os.str());
          }
          grid.push_back({m, d, tuple, P, std::move(rep)});
        }
    v.note(std::to_string(passed) + "/" + std::to_string(grid.size()) + " instances pass with the printed eps; " +
           std::to_string(derived_only) + " more pass every check once eps is taken from the recursion");
    v.note("slowest instance " + std::to_string(slowest) + " s");
  });

  criterion(2, "fixed-dimension anchors m=2 q=(1,1) and m=1 q=(-1), n <= 12", 10, [](Verdict& v) {
    const std::vector<std::size_t> expected{1, 0, 3, 0, 5, 0, 7, 0, 9, 0, 11, 0, 13};
    // oracle: coefficients of (1 - t^4) / (1 - t^2)^3
    std::vector<long long> series(13, 0);
    for (int n = 0; n <= 12; n += 2) series[n] = n + 1;
    for (std::size_t n = 0; n < 13; ++n)
      if (static_cast<long long>(expected[n]) != series[n]) v.fail("anchor table disagrees with its series");
    for (const auto& P : {test::rational_q({1, 1}), test::rational_q({-1})}) {
      const auto dims = centre_dims(P, 12);
      if (dims != expected) v.fail("dims differ for q=" + q_string(*P));
    }
  });

  criterion(3, "generic q, m in 1..3: Z = K through degree 40, not finitely generated", 60, [](Verdict& v) {
    for (int m = 1; m <= 3; ++m) {
      const auto P = generic_q(m);
      const auto dims = centre_dims(P, 40);
      if (dims[0] != 1) v.fail("dim Z^0 != 1 for m=" + std::to_string(m));
      for (std::size_t n = 1; n < dims.size(); ++n)
        if (dims[n] != 0) v.fail("dim Z^" + std::to_string(n) + " != 0 for m=" + std::to_string(m));
      if (verify_finite_generation(P, 10).finitely_generated) v.fail("finite generation reported for m=" + std::to_string(m));
      if (krull_dimension(std::nullopt) != 0) v.fail("Krull dimension of K is not 0");
    }
  });

  criterion(4, "characteristic cases: F_2 with q = 1, F_4 with d = 3, F_7 with d | 6", 600, [](Verdict& v) {
    auto F2 = make_field(FieldSpec::finite(2));
    std::vector<QParamsHandle> cases;
    for (int m = 1; m <= 3; ++m) cases.push_back(QParams::make(F2, std::vector<Scalar>(m, F2->one())));
    auto F4 = make_field(FieldSpec::finite(2, {1, 1, 1}));
    cases.push_back(QParams::make(F4, {F4->generator(), F4->one(), F4->one()}));
    auto F7 = make_field(FieldSpec::finite(7));
    cases.push_back(QParams::make(F7, {F7->from_int(3), F7->one(), F7->one()}));
    cases.push_back(QParams::make(F7, {F7->from_int(2), F7->one(), F7->one()}));
    for (const auto& P : cases) {
      const CaseTag tag = classify_case(*P);
      const bool char2 = P->field()->characteristic() == 2;
      if (char2 && tag != CaseTag::even_or_char2) v.fail("char 2 instance not in the even_or_char2 branch");
      if (!char2 && tag == CaseTag::even_or_char2) v.fail("odd-p, odd-m instance in the even branch");
      const auto rep = verify_structure_theorem(P, default_degree_bound(*P));
      std::ostringstream os;
      os << P->field()->name() << " m=" << P->m() << " q=" << q_string(*P) << " d=" << *P->d() << " "
         << case_name(tag) << ": " << (rep.pass ? "PASS" : "FAIL") << " (N=" << rep.N << ")";
      if (rep.pass) v.note(os.str());
      else v.fail(os.str());
    }
  });

  criterion(5, "relation-scalar sensitivity: 2*eps fails on every grid instance", 600, [](Verdict& v) {
    if (grid.empty()) v.fail("grid unavailable");
    for (const auto& g : grid) {
      const auto& gens = *g.report.generators;
      const Scalar two = gens.epsilon.field()->from_int(2);
      for (const Scalar& eps : {gens.epsilon_derived, gens.epsilon}) {
        const auto r = verify_relation(gens, eps * two);
        if (r.holds || r.difference.is_zero())
          v.fail("m=" + std::to_string(g.m) + " d=" + std::to_string(g.d) + ": perturbed relation still holds");
      }
    }
    v.note(std::to_string(2 * grid.size()) + " perturbed relations checked");
  });

  criterion(6, "socle-deformation dichotomy, m in {4, 5} over Q", 30, [](Verdict& v) {
    auto Q = test::rationals();
    for (int m : {4, 5}) {
      const std::string tag = "m=" + std::to_string(m);
      // (a) b2 = 1, b1 = 0, t = 1
      try {
        const auto A = build_deformed(Q, m, {Q->one(), Q->zero(), Q->one()});
        const auto soc = left_socle(A);
        bool all_simple = true;
        std::set<std::vector<std::size_t>> supports;
        for (int i = 0; i < m; ++i) {
          all_simple = all_simple && two_dim_simple_check(A, i);
          supports.insert(vertex_dimension_vector(A, left_ideal(A, A.basis_vector(QuiverBasis{m}.a(i)))));
        }
        if (!all_simple) v.fail(tag + " (a): some A a_i is not a 2-dimensional simple module");
        if (supports.size() != static_cast<std::size_t>(m)) v.fail(tag + " (a): simple modules not pairwise distinct");
        if (soc.dim() < 2u * static_cast<std::size_t>(m)) v.fail(tag + " (a): dim soc < 2m");
        v.note(tag + " (a): dim soc = " + std::to_string(soc.dim()) + ", " + std::to_string(supports.size()) +
               " pairwise non-isomorphic 2-dim simples");
      } catch (const NonAssociative& e) {
        v.fail(tag + " (a): the oriented relations are not confluent for odd m, no 4m-dim algebra exists (" +
               e.what() + ")");
      }
      // (b) b2 = 0, b1 = 1, t = 1/2
      const auto B = build_deformed(Q, m, {Q->parse("1/2"), Q->one(), Q->zero()});
      const auto soc = left_socle(B);
      std::vector<SparseVec> s;
      for (int i = 0; i < m; ++i) s.push_back(B.basis_vector(QuiverBasis{m}.s(i)));
      if (!(soc == Subspace::span(Q, B.dim(), s))) v.fail(tag + " (b): socle is not span{a_i abar_i}");
      const auto L = build_lambda_q(*QParams::make(Q, std::vector<Scalar>(m, Q->one())));
      const auto iso = rescaling_isomorphism(quotient(B, soc), socle_quotient(L));
      if (!iso) v.fail(tag + " (b): no rescaling isomorphism to Lambda/soc");
      else v.note(tag + " (b): socle = span{a_i abar_i}, quotient rescaling-isomorphic to Lambda/soc");
    }
  });

  criterion(7, "Frobenius: Lambda_q for 10 random q per m in 1..4; t = 1, b1 = 1 deformation not", 120,
            [](Verdict& v) {
              std::mt19937_64 rng(77);
              auto Q = test::rationals();
              for (int m = 1; m <= 4; ++m)
                for (int k = 0; k < 10; ++k) {
                  const auto P = k % 2 ? test::random_q_with_order(m, 1 + k % 4, rng)
                                       : QParams::make(Q, random_rational_q(m, rng));
                  const auto A = build_lambda_q(*P);
                  const auto cert = is_frobenius(A);
                  if (!cert.frobenius || !cert.functional ||
                      gram_matrix(A, *cert.functional).determinant().is_zero())
                    v.fail("Lambda_q not certified Frobenius for q=" + q_string(*P));
                }
              for (int m = 1; m <= 3; ++m) {
                const auto cert = is_frobenius(build_deformed(Q, m, {Q->one(), Q->one(), Q->zero()}));
                if (cert.frobenius || cert.method != "symbolic")
                  v.fail("m=" + std::to_string(m) + ": t=1, b1=1 deformation not refuted symbolically");
                else
                  v.note("m=" + std::to_string(m) + ": det G(lambda) = " + cert.determinant.value_or("?"));
              }
            });

  criterion(8, "normalization a_i -> q_0...q_i a_i, 10 random q per m in 1..6", 10, [](Verdict& v) {
    std::mt19937_64 rng(88);
    auto Q = test::rationals();
    for (int m = 1; m <= 6; ++m)
      for (int k = 0; k < 10; ++k) {
        const auto P = QParams::make(Q, random_rational_q(m, rng));
        std::vector<Scalar> normalized(m, Q->one());
        normalized[0] = P->zeta();
        const auto A = build_lambda_q(*QParams::make(Q, normalized));
        const auto B = build_lambda_q(*P);
        if (!is_rescaling_isomorphism(A, B, normalization(*P))) v.fail("map rejected for q=" + q_string(*P));
        if (!rescaling_isomorphism(B, A)) v.fail("solver found no rescaling for q=" + q_string(*P));
      }
  });

  criterion(9, "Ext calculus: associativity, grade basis vs path enumeration, confluence", 60, [](Verdict& v) {
    std::mt19937_64 rng(99);
    std::vector<QParamsHandle> instances;
    for (int m = 1; m <= 4; ++m) {
      instances.push_back(QParams::make(test::rationals(), random_rational_q(m, rng)));
      instances.push_back(test::random_q_with_order(m, 6, rng));
    }
    instances.push_back(generic_q(2));
    std::size_t triples = 0, words = 0;
    for (const auto& P : instances) {
      const int m = P->m();
      auto random_mono = [&](bool chain_from, int origin) {
        const long long n = rng() % 6, s = rng() % (n + 1);
        return ExtMonomial{chain_from ? origin : static_cast<int>(rng() % m), s, n - s};
      };
      for (int k = 0; k < 1000; ++k, ++triples) {
        const bool chain = k % 4 != 0;
        const ExtMonomial x = random_mono(false, 0);
        const ExtMonomial y = random_mono(chain, x.terminus(m));
        const ExtMonomial z = random_mono(chain, y.terminus(m));
        const auto X = ExtElement::monomial(P, x), Y = ExtElement::monomial(P, y), Z = ExtElement::monomial(P, z);
        if (!((X * Y) * Z == X * (Y * Z))) v.fail("associativity fails for q=" + q_string(*P));
      }
      for (int n = 0; n <= 8; ++n) {
        std::set<std::tuple<int, long long, long long>> oracle, listed;
        for (const auto& w : test::all_words(m, n)) {
          const auto first = test::reduce(*P, w, rng);
          const auto x = test::monomial_of(first.second, m);
          oracle.insert({x.i, x.s, x.t});
          if (n <= 6) {
            ++words;
            for (int again = 0; again < 3; ++again) {
              const auto other = test::reduce(*P, w, rng);
              if (!(other.first == first.first) || !(other.second.arrows == first.second.arrows))
                v.fail("rewrite orderings disagree for q=" + q_string(*P));
            }
          }
        }
        const auto basis = grade_basis(*P, n);
        for (const auto& x : basis) listed.insert({x.i, x.s, x.t});
        if (basis.size() != static_cast<std::size_t>(m * (n + 1)) || listed != oracle)
          v.fail("grade basis mismatch at m=" + std::to_string(m) + " n=" + std::to_string(n));
      }
    }
    v.note(std::to_string(triples) + " triples, " + std::to_string(words) + " words reduced under 4 orderings");
  });

  criterion(10, "Krull dimension 2 for finite d, 0 for generic q; partial sums quadratic", 900, [](Verdict& v) {
    if (grid.empty()) v.fail("grid unavailable");
    for (const auto& g : grid)
      if (krull_dimension(presented_ring(*g.report.generators)) != 2)
        v.fail("m=" + std::to_string(g.m) + " d=" + std::to_string(g.d) + ": Krull dimension != 2");
    for (int m = 1; m <= 3; ++m)
      if (krull_dimension(std::nullopt) != 0 || !verify_structure_theorem(generic_q(m), 12).pass)
        v.fail("generic q, m=" + std::to_string(m));
    // Partial sums are quasi-polynomial with period lcm(Lx, Ly, Lw); four
    // samples per residue class need degrees up to 4 * period - 1, so the
    // range is extended on the first tuple of every (m, d).
    std::size_t fitted = 0;
    for (const auto& g : grid) {
      if (g.tuple != 0) continue;
      const auto ring = presented_ring(*g.report.generators);
      const long long period = hilbert_period(ring);
      const long long N = std::max<long long>(g.report.N, 4 * period - 1);
      const auto dims = centre_dims(g.params, N);
      const auto hilbert = hilbert_coefficients(ring, N);
      for (long long n = 0; n <= N; ++n)
        if (static_cast<long long>(dims[n]) != hilbert[n]) {
          v.fail("m=" + std::to_string(g.m) + " d=" + std::to_string(g.d) + ": dims leave the Hilbert series at n=" +
                 std::to_string(n));
          break;
        }
      const auto fit = partial_sums_quadratic(dims, period);
      if (!fit.fits || fit.tested != static_cast<std::size_t>(period))
        v.fail("m=" + std::to_string(g.m) + " d=" + std::to_string(g.d) + ": partial sums not quadratic");
      else
        ++fitted;
    }
    v.note(std::to_string(fitted) + " (m, d) instances fitted on every residue class, dims matched through 4*period-1");
  });

  std::cout << (failures ? std::to_string(failures) + " criteria FAIL" : std::string("all criteria PASS")) << "\n";
  return failures;
}
