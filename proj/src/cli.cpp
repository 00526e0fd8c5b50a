#include "koszulq/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace kq {

using ordered_json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// q specifications

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

long long parse_integer(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw InvalidArgument("malformed " + what + ": '" + text + "'");
  }
}

std::vector<Scalar> parse_values(const FieldHandle& F, const std::string& list, int m) {
  std::vector<Scalar> q;
  for (const auto& v : split(list, ',')) {
    if (v.empty()) throw InvalidArgument("empty q entry");
    q.push_back(F->parse(v));
  }
  if (static_cast<int>(q.size()) != m)
    throw InvalidArgument("expected " + std::to_string(m) + " q entries, got " + std::to_string(q.size()));
  return q;
}

// Coefficients of a polynomial in x over F_p, parsed through Q(u).
std::vector<std::uint64_t> parse_modulus(const std::string& text, std::uint64_t p) {
  std::string as_u = text;
  for (auto& c : as_u) {
    if (c == 'x') c = 'u';
    else if (c == 'u') throw InvalidArgument("modulus must be a polynomial in x");
  }
  const auto Qu = make_field(FieldSpec::rational_function());
  const Scalar f = Qu->parse(as_u);
  const auto& rf = std::get<RatFunc>(f.repr());
  if (rf.den.size() != 1 || rf.den[0] != 1) throw InvalidArgument("modulus must be a polynomial");
  std::vector<std::uint64_t> coeffs;
  const mpz_class P(static_cast<unsigned long>(p));
  for (const auto& c : rf.num) {
    if (c.get_den() != 1) throw InvalidArgument("modulus coefficients must be integers");
    mpz_class r = c.get_num() % P;
    if (r < 0) r += P;
    coeffs.push_back(r.get_ui());
  }
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  return coeffs;
}

}  // namespace

ParsedQ parse_q_spec(const std::string& spec, int m) {
  if (m < 1) throw InvalidArgument("m must be positive");
  if (spec == "generic") {
    auto F = make_field(FieldSpec::rational_function());
    std::vector<Scalar> q(m, F->one());
    q[0] = F->generator();
    return {F, q};
  }
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw InvalidArgument("malformed q-spec '" + spec + "'");
  const std::string kind = spec.substr(0, colon);
  const auto fields = split(spec.substr(colon + 1), ':');
  ParsedQ out;
  if (kind == "rat" && fields.size() == 1) {
    out.field = make_field(FieldSpec::rationals());
    out.q = parse_values(out.field, fields[0], m);
  } else if (kind == "cyclo" && fields.size() == 2) {
    long long D = parse_integer(fields[0], "cyclotomic order");
    if (D < 1) throw InvalidArgument("cyclotomic order must be positive");
    out.field = make_field(FieldSpec::cyclotomic(static_cast<unsigned>(D)));
    const Scalar z = out.field->generator();
    for (const auto& e : split(fields[1], ',')) out.q.push_back(z.pow(parse_integer(e, "exponent")));
    if (static_cast<int>(out.q.size()) != m)
      throw InvalidArgument("expected " + std::to_string(m) + " exponents");
  } else if (kind == "fp" && fields.size() == 2) {
    long long p = parse_integer(fields[0], "prime");
    if (p < 2) throw InvalidArgument("p must be a prime");
    out.field = make_field(FieldSpec::finite(static_cast<std::uint64_t>(p)));
    out.q = parse_values(out.field, fields[1], m);
  } else if (kind == "fpx" && fields.size() == 3) {
    long long p = parse_integer(fields[0], "prime");
    if (p < 2) throw InvalidArgument("p must be a prime");
    out.field = make_field(FieldSpec::finite(static_cast<std::uint64_t>(p), parse_modulus(fields[1], p)));
    out.q = parse_values(out.field, fields[2], m);
  } else {
    throw InvalidArgument("malformed q-spec '" + spec + "'");
  }
  for (std::size_t i = 0; i < out.q.size(); ++i)
    if (out.q[i].is_zero()) throw InvalidArgument("q_" + std::to_string(i) + " must be nonzero");
  return out;
}

// ---------------------------------------------------------------------------
// Pipelines

bool Report::all_pass() const {
  for (const auto& c : checks)
    if (c.verdict == "FAIL") return false;
  return true;
}

namespace {

using Clock = std::chrono::steady_clock;

class PipelineRun {
 public:
  PipelineRun(const InstanceSpec& spec) : spec_(spec) {
    const ParsedQ parsed = parse_q_spec(spec.q_spec.empty() ? ones_spec(spec.m) : spec.q_spec, spec.m);
    field_ = parsed.field;
    params_ = QParams::make(field_, parsed.q);
    N_ = spec.max_degree.value_or(default_degree_bound(*params_));
    if (N_ < 0) throw InvalidArgument("max-degree must be nonnegative");

    auto& in = report_.instance;
    in.command = spec.command;
    in.m = spec.m;
    in.field = field_->name();
    in.characteristic = field_->characteristic();
    for (const auto& x : params_->q()) in.q.push_back(x.short_string());
    in.zeta = params_->zeta().short_string();
    in.d = params_->d();
    in.N = N_;
    in.seed = spec.seed;
    in.t = spec.t;
    in.b1 = spec.b1;
    in.b2 = spec.b2;
    report_.case_tag = case_name(classify_case(*params_));
  }

  Report run() {
    const std::string& c = spec_.command;
    if (c == "centre") timed("centre", [&] { centre(); });
    else if (c == "structure") timed("structure", [&] { structure(); });
    else if (c == "socle") timed("socle", [&] { socle(); });
    else if (c == "deform") timed("deform", [&] { deform(); });
    else if (c == "iso") timed("iso", [&] { iso(); });
    else if (c == "frobenius") timed("frobenius", [&] { frobenius(); });
    else if (c == "finitegen") timed("finitegen", [&] { finitegen(); });
    else if (c == "report") {
      timed("structure", [&] { structure(); });
      timed("finitegen", [&] { finitegen(); });
      timed("iso", [&] { iso(); });
      timed("frobenius", [&] { frobenius(); });
      timed("socle", [&] { socle(); });
      if (has_deformation()) timed("deform", [&] { deform(); });
    } else {
      throw InvalidArgument("unknown command '" + c + "'");
    }
    if (spec_.timing) report_.timing = timing_;
    return std::move(report_);
  }

 private:
  static std::string ones_spec(int m) {
    std::string s = "rat:";
    for (int i = 0; i < m; ++i) s += i ? ",1" : "1";
    return s;
  }

  template <class F>
  void timed(const std::string& phase, F&& f) {
    const auto start = Clock::now();
    f();
    timing_[phase] = std::chrono::duration<double>(Clock::now() - start).count();
  }

  void check(std::string name, bool ok, std::string detail = {}) {
    report_.checks.push_back({std::move(name), ok ? "PASS" : "FAIL", std::move(detail)});
  }
  void skip(std::string name, std::string reason) {
    report_.checks.push_back({std::move(name), "SKIPPED", std::move(reason)});
  }

  bool has_deformation() const { return spec_.t || spec_.b1 || spec_.b2; }

  DeformationParams deformation() const {
    auto value = [&](const std::optional<std::string>& s, long long dflt) {
      return s ? field_->parse(*s) : field_->from_int(dflt);
    };
    return {value(spec_.t, 1), value(spec_.b1, 0), value(spec_.b2, 0)};
  }

  // Lambda_q, or the deformation when deformation parameters were given.
  StructureConstAlgebra algebra() const {
    if (has_deformation()) return build_deformed(field_, params_->m(), deformation());
    return build_lambda_q(*params_);
  }
  std::string algebra_name() const { return has_deformation() ? "deformation" : "Lambda_q"; }

  static std::string vector_string(const StructureConstAlgebra& A, const SparseVec& v) {
    std::string out;
    for (const auto& [k, c] : v) {
      std::string coeff = c.short_string();
      if (!out.empty()) out += "+";
      out += coeff == "1" ? A.label(k) : "(" + coeff + ")*" + A.label(k);
    }
    return out.empty() ? "0" : out;
  }

  static std::string subspace_string(const StructureConstAlgebra& A, const Subspace& S) {
    std::string out = "dim=" + std::to_string(S.dim()) + " basis=[";
    for (std::size_t k = 0; k < S.basis.size(); ++k) out += (k ? ", " : "") + vector_string(A, S.basis[k]);
    return out + "]";
  }

  void set_dims(const std::vector<std::size_t>& solver, const std::vector<long long>* hilbert) {
    report_.dims.clear();
    for (std::size_t n = 0; n < solver.size(); ++n) {
      DimRow row{static_cast<long long>(n), static_cast<long long>(solver[n]), std::nullopt};
      if (hilbert) row.hilbert = (*hilbert)[n];
      report_.dims.push_back(row);
    }
  }

  void centre() {
    CentreBasis basis;
    const auto dims = centre_dims(params_, N_, &basis);
    const CaseTag tag = classify_case(*params_);
    if (tag == CaseTag::not_root_of_unity) {
      set_dims(dims, nullptr);
      bool trivial = dims[0] == 1;
      for (std::size_t n = 1; n < dims.size(); ++n) trivial = trivial && dims[n] == 0;
      check("centre-trivial", trivial, "zeta is not a root of unity");
    } else {
      const auto hilbert = hilbert_coefficients(presented_ring(build_generators(params_)), N_);
      set_dims(dims, &hilbert);
      std::string detail = "n<=" + std::to_string(N_);
      bool match = true;
      for (long long n = 0; n <= N_ && match; ++n)
        if (static_cast<long long>(dims[n]) != hilbert[n]) {
          match = false;
          detail = "first mismatch at n=" + std::to_string(n);
        }
      check("centre-dims-match-hilbert", match, detail);
    }
    bool central = true;
    for (const auto& [n, elems] : basis.by_degree)
      for (const auto& z : elems) central = central && is_central(z, 2);
    check("basis-central", central, "graded commutation with all monomials of length <= 2");
  }

  void structure() {
    const StructureReport r = verify_structure_theorem(params_, N_);
    if (r.generators) {
      const auto& g = *r.generators;
      report_.generators = GeneratorRecord{g.Lx, g.Ly, g.Lw, g.sigma_d, g.p,
                                           g.x.to_string(), g.y.to_string(), g.w.to_string()};
      report_.epsilon = EpsilonRecord{g.epsilon.short_string(), g.epsilon_derived.short_string()};
      report_.relation = RelationRecord{relation_string(g.p, g.epsilon), r.relation->holds,
                                        r.relation->difference.to_string(),
                                        relation_string(g.p, g.epsilon_derived), r.derived_relation->holds};
      set_dims(r.solver_dims, &r.hilbert_dims);
      check("x-central", r.x_central);
      check("y-central", r.y_central);
      check("w-central", r.w_central);
      check("relation", r.relation->holds, report_.relation->text);
      check("relation-derived-epsilon", r.derived_relation->holds, report_.relation->derived_text);
      check("krull-dimension", krull_dimension(presented_ring(g)) == 2,
            std::to_string(krull_dimension(presented_ring(g))));
    } else {
      set_dims(r.solver_dims, &r.hilbert_dims);
      skip("x-central", "zeta is not a root of unity");
      skip("y-central", "zeta is not a root of unity");
      skip("w-central", "zeta is not a root of unity");
      check("krull-dimension", krull_dimension(std::nullopt) == 0, "0");
    }
    check("centre-dims-match-hilbert", r.dims_match,
          r.first_failing_degree ? "first mismatch at n=" + std::to_string(*r.first_failing_degree)
                                 : "n<=" + std::to_string(N_));
    const PresentationRecord rec = hh_mod_nil_report(params_);
    check("hh-mod-nilpotence", true, rec.presentation + ", Krull dimension " +
                                         std::to_string(rec.krull_dimension) + "; " + rec.note);
    check("structure-theorem", r.pass, "N=" + std::to_string(N_));
  }

  void finitegen() {
    const auto r = verify_finite_generation(params_, N_);
    check("finite-generation", r.finitely_generated, r.detail);
  }

  void iso() {
    const int m = params_->m();
    std::vector<Scalar> normalized(m, field_->one());
    normalized[0] = params_->zeta();
    const auto Pn = QParams::make(field_, normalized);
    const auto A = build_lambda_q(*Pn);
    const auto B = build_lambda_q(*params_);
    RescalingAssignment r;
    Scalar prefix = field_->one();
    for (int i = 0; i < m; ++i) {
      prefix *= params_->q_at(i);
      r.lambda.push_back(prefix);
      r.mu.push_back(field_->one());
    }
    check("normalization-map", is_rescaling_isomorphism(A, B, r),
          "a_i -> q_0...q_i a_i from Lambda_(zeta,1,...,1) to Lambda_q");
    const auto solved = rescaling_isomorphism(B, A);
    check("rescaling-solver", solved.has_value(),
          solved ? "Lambda_q -> Lambda_(zeta,1,...,1) found and certified" : "no rescaling found");
  }

  void frobenius() {
    try {
      const auto A = algebra();
      const auto cert = is_frobenius(A, spec_.seed);
      std::string detail = algebra_name() + ", " + cert.method;
      if (cert.determinant && cert.determinant->size() <= 200) detail += ", det G = " + *cert.determinant;
      check("frobenius", cert.frobenius, detail);
    } catch (const NonAssociative& e) {
      check("frobenius", false, std::string("not associative: ") + e.what());
    }
  }

  void socle() {
    try {
      const auto A = algebra();
      const Subspace soc = left_socle(A);
      check("socle", true, algebra_name() + " " + subspace_string(A, soc));
      check("socle-two-sided", is_two_sided_ideal(A, soc));
    } catch (const NonAssociative& e) {
      check("socle", false, std::string("not associative: ") + e.what());
    }
  }

  // Theorem-1 dichotomy for K Q / J_eta: either every A a_i is a 2-dimensional
  // simple module (pairwise non-isomorphic), or soc = span{a_i abar_i} and the
  // socle quotient is a rescaling of Lambda/soc.
  void deform() {
    const int m = params_->m();
    std::optional<StructureConstAlgebra> A;
    try {
      A.emplace(build_deformed(field_, m, deformation()));
      check("associative", true);
    } catch (const NonAssociative& e) {
      check("associative", false, e.what());
      return;
    }
    const Subspace soc = left_socle(*A);
    check("socle", true, subspace_string(*A, soc));

    std::string simple_detail;
    bool all_simple = true;
    std::vector<std::vector<std::size_t>> dimvecs;
    for (int i = 0; i < m; ++i) {
      bool simple = false;
      try {
        simple = two_dim_simple_check(*A, i);
      } catch (const NotApplicable&) {
      }
      all_simple = all_simple && simple;
      const auto ai = A->index_of("a" + std::to_string(i));
      dimvecs.push_back(vertex_dimension_vector(*A, left_ideal(*A, A->basis_vector(*ai))));
    }
    bool distinct = true;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) distinct = distinct && dimvecs[i] != dimvecs[j];

    const auto Lambda = build_lambda_q(*QParams::make(field_, std::vector<Scalar>(m, field_->one())));
    std::optional<RescalingAssignment> iso;
    bool soc_is_s = false;
    if (!all_simple) {
      std::vector<SparseVec> s;
      for (int i = 0; i < m; ++i) s.push_back(A->basis_vector(QuiverBasis{m}.s(i)));
      soc_is_s = soc == Subspace::span(field_, A->dim(), s);
      if (soc_is_s && is_two_sided_ideal(*A, soc)) iso = rescaling_isomorphism(quotient(*A, soc), socle_quotient(Lambda));
    }
    if (all_simple) {
      check("two-dim-simple-modules", distinct,
            distinct ? "all A a_i simple, pairwise non-isomorphic" : "simple but not pairwise distinct");
      check("socle-exceeds-m", soc.dim() > static_cast<std::size_t>(m),
            "dim soc=" + std::to_string(soc.dim()));
    } else {
      check("socle-is-span-a_i-abar_i", soc_is_s);
      check("socle-quotient-rescaling", iso.has_value(),
            iso ? "A/soc isomorphic to Lambda/soc" : "no rescaling isomorphism");
    }
  }

  const InstanceSpec& spec_;
  FieldHandle field_;
  QParamsHandle params_;
  long long N_ = 0;
  Report report_;
  std::map<std::string, double> timing_;
};

}  // namespace

Report run_instance(const InstanceSpec& spec) { return PipelineRun(spec).run(); }

// ---------------------------------------------------------------------------
// Serialization

namespace {

template <class T>
ordered_json opt(const std::optional<T>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

template <class T>
std::optional<T> get_opt(const ordered_json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

ordered_json report_json(const Report& r) {
  ordered_json j;
  j["schema_version"] = r.schema_version;
  const auto& in = r.instance;
  j["instance"] = {{"command", in.command}, {"m", in.m},          {"field", in.field},
                   {"characteristic", in.characteristic},         {"q", in.q},
                   {"zeta", in.zeta},       {"d", opt(in.d)},     {"N", in.N},
                   {"seed", in.seed},       {"t", opt(in.t)},     {"b1", opt(in.b1)},
                   {"b2", opt(in.b2)}};
  j["case"] = r.case_tag;
  if (r.generators) {
    const auto& g = *r.generators;
    j["generators"] = {{"Lx", g.Lx}, {"Ly", g.Ly}, {"Lw", g.Lw}, {"sigma_d", g.sigma_d},
                       {"p", g.p},   {"x", g.x},   {"y", g.y},   {"w", g.w}};
  } else {
    j["generators"] = nullptr;
  }
  if (r.epsilon) {
    j["epsilon"] = {{"printed", r.epsilon->printed}, {"derived", r.epsilon->derived}};
  } else {
    j["epsilon"] = nullptr;
  }
  if (r.relation) {
    const auto& rel = *r.relation;
    j["relation"] = {{"text", rel.text},
                     {"holds", rel.holds},
                     {"difference", rel.difference},
                     {"derived_text", rel.derived_text},
                     {"derived_holds", rel.derived_holds}};
  } else {
    j["relation"] = nullptr;
  }
  j["dims"] = ordered_json::array();
  for (const auto& row : r.dims)
    j["dims"].push_back({{"n", row.n}, {"solver_dim", row.solver}, {"hilbert_dim", opt(row.hilbert)}});
  j["checks"] = ordered_json::array();
  for (const auto& c : r.checks)
    j["checks"].push_back({{"name", c.name}, {"verdict", c.verdict}, {"detail", c.detail}});
  if (r.timing) {
    j["timing"] = ordered_json::object();
    for (const auto& [k, v] : *r.timing) j["timing"][k] = v;
  } else {
    j["timing"] = nullptr;
  }
  return j;
}

std::string pad_left(const std::string& s, std::size_t w) {
  return s.size() >= w ? s : std::string(w - s.size(), ' ') + s;
}

std::string render_text(const Report& r) {
  std::ostringstream out;
  const auto& in = r.instance;
  out << "command: " << in.command << "\n";
  out << "instance: m=" << in.m << " field=" << in.field << " char=" << in.characteristic << " q=[";
  for (std::size_t k = 0; k < in.q.size(); ++k) out << (k ? ", " : "") << in.q[k];
  out << "] zeta=" << in.zeta << " d=" << (in.d ? std::to_string(*in.d) : "inf") << "\n";
  out << "case: " << r.case_tag << "  N=" << in.N << "  seed=" << in.seed << "\n";
  if (in.t || in.b1 || in.b2)
    out << "deformation: t=" << in.t.value_or("1") << " b1=" << in.b1.value_or("0")
        << " b2=" << in.b2.value_or("0") << "\n";
  if (r.generators) {
    const auto& g = *r.generators;
    out << "generators: |x|=" << g.Lx << " |y|=" << g.Ly << " |w|=" << g.Lw << " sigma*d=" << g.sigma_d
        << " p=" << g.p << "\n";
    out << "  x = " << g.x << "\n  y = " << g.y << "\n  w = " << g.w << "\n";
  }
  if (r.epsilon) out << "epsilon: " << r.epsilon->printed << " (derived " << r.epsilon->derived << ")\n";
  if (r.relation) {
    out << "relation: " << r.relation->text << " " << (r.relation->holds ? "PASS" : "FAIL") << "\n";
    if (!r.relation->holds) out << "  difference: " << r.relation->difference << "\n";
    out << "relation (derived epsilon): " << r.relation->derived_text << " "
        << (r.relation->derived_holds ? "PASS" : "FAIL") << "\n";
  }
  if (!r.dims.empty()) {
    std::size_t w = 7;
    for (const auto& row : r.dims) w = std::max(w, std::to_string(row.solver).size() + 1);
    out << "dims:\n" << pad_left("n", 6) << pad_left("solver", w + 1) << pad_left("hilbert", w + 1) << "\n";
    for (const auto& row : r.dims)
      out << pad_left(std::to_string(row.n), 6) << pad_left(std::to_string(row.solver), w + 1)
          << pad_left(row.hilbert ? std::to_string(*row.hilbert) : "-", w + 1) << "\n";
  }
  out << "checks:\n";
  for (const auto& c : r.checks) {
    out << "  " << c.name << ": " << c.verdict;
    if (!c.detail.empty()) out << " (" << c.detail << ")";
    out << "\n";
  }
  if (r.timing) {
    out << "timing:\n";
    for (const auto& [k, v] : *r.timing) out << "  " << k << ": " << std::fixed << std::setprecision(3) << v << "s\n";
  }
  out << "overall: " << (r.all_pass() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string render_csv(const Report& r) {
  std::string out = "n,solver_dim,hilbert_dim\n";
  for (const auto& row : r.dims)
    out += std::to_string(row.n) + "," + std::to_string(row.solver) + "," +
           (row.hilbert ? std::to_string(*row.hilbert) : "") + "\n";
  return out;
}

}  // namespace

std::string to_json(const Report& report) { return report_json(report).dump(2) + "\n"; }

Report report_from_json(const std::string& text) {
  try {
    const auto j = ordered_json::parse(text);
    Report r;
    r.schema_version = j.at("schema_version").get<int>();
    if (r.schema_version != 1) throw InvalidArgument("unsupported schema_version");
    const auto& in = j.at("instance");
    auto& rec = r.instance;
    rec.command = in.at("command").get<std::string>();
    rec.m = in.at("m").get<int>();
    rec.field = in.at("field").get<std::string>();
    rec.characteristic = in.at("characteristic").get<std::uint64_t>();
    rec.q = in.at("q").get<std::vector<std::string>>();
    rec.zeta = in.at("zeta").get<std::string>();
    rec.d = get_opt<std::uint64_t>(in, "d");
    rec.N = in.at("N").get<long long>();
    rec.seed = in.at("seed").get<std::uint64_t>();
    rec.t = get_opt<std::string>(in, "t");
    rec.b1 = get_opt<std::string>(in, "b1");
    rec.b2 = get_opt<std::string>(in, "b2");
    r.case_tag = j.at("case").get<std::string>();
    if (const auto& g = j.at("generators"); !g.is_null())
      r.generators = GeneratorRecord{g.at("Lx").get<long long>(), g.at("Ly").get<long long>(),
                                     g.at("Lw").get<long long>(), g.at("sigma_d").get<long long>(),
                                     g.at("p").get<unsigned>(),   g.at("x").get<std::string>(),
                                     g.at("y").get<std::string>(), g.at("w").get<std::string>()};
    if (const auto& e = j.at("epsilon"); !e.is_null())
      r.epsilon = EpsilonRecord{e.at("printed").get<std::string>(), e.at("derived").get<std::string>()};
    if (const auto& rel = j.at("relation"); !rel.is_null())
      r.relation = RelationRecord{rel.at("text").get<std::string>(), rel.at("holds").get<bool>(),
                                  rel.at("difference").get<std::string>(),
                                  rel.at("derived_text").get<std::string>(),
                                  rel.at("derived_holds").get<bool>()};
    for (const auto& row : j.at("dims"))
      r.dims.push_back({row.at("n").get<long long>(), row.at("solver_dim").get<long long>(),
                        get_opt<long long>(row, "hilbert_dim")});
    for (const auto& c : j.at("checks"))
      r.checks.push_back({c.at("name").get<std::string>(), c.at("verdict").get<std::string>(),
                          c.at("detail").get<std::string>()});
    if (const auto& t = j.at("timing"); !t.is_null()) {
      std::map<std::string, double> timing;
      for (const auto& [k, v] : t.items()) timing[k] = v.get<double>();
      r.timing = std::move(timing);
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("report JSON does not match schema: ") + e.what());
  }
}

std::string render(const Report& report, const std::string& format) {
  if (format == "json") return to_json(report);
  if (format == "csv") return render_csv(report);
  if (format == "text") return render_text(report);
  throw InvalidArgument("unknown format '" + format + "'");
}

// ---------------------------------------------------------------------------
// Command line

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of graded centres and socle deformations of Lambda_q", "koszulq"};
  app.require_subcommand(1);
  InstanceSpec spec;

  struct Sub {
    const char* name;
    const char* help;
  };
  const Sub subs[] = {
      {"centre", "graded centre dimensions of E(Lambda_q) by exact nullspace"},
      {"structure", "verify the presentation K[x,y,w]/<w^p - eps xy> of the graded centre"},
      {"socle", "socle of Lambda_q or of a deformation"},
      {"deform", "socle-deformation dichotomy for K Q / J_eta"},
      {"iso", "normalization isomorphism Lambda_q = Lambda_(zeta,1,...,1)"},
      {"frobenius", "Frobenius test by a nondegenerate functional"},
      {"finitegen", "finite generation of Ext over the graded centre"},
      {"report", "run every pipeline"},
  };
  std::optional<std::string> t, b1, b2;
  std::optional<long long> max_degree;
  std::optional<std::string> output;
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("--m", spec.m, "number of vertices")->required()->check(CLI::PositiveNumber);
    sub->add_option("--q", spec.q_spec,
                    "q-spec: rat:v0,..  cyclo:D:e0,..  fp:p:v0,..  fpx:p:f:v0,..  generic (default all 1)");
    sub->add_option("--t", t, "deformation parameter t");
    sub->add_option("--b1", b1, "coefficient of pi");
    sub->add_option("--b2", b2, "coefficient of chi");
    sub->add_option("--max-degree", max_degree, "degree bound N (default |x|+|y|+2|w|, or 12)");
    sub->add_option("--format", spec.format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--output", output, "write the report to this file");
    sub->add_option("--seed", spec.seed, "seed for randomized checks");
    sub->add_flag("--timing", spec.timing, "record per-phase wall-clock times");
    sub->callback([&spec, name = std::string(s.name)] { spec.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }
  spec.t = t;
  spec.b1 = b1;
  spec.b2 = b2;
  spec.max_degree = max_degree;
  spec.output = output;

  Report report;
  try {
    report = run_instance(spec);
  } catch (const InvalidArgument& e) {
    err << "koszulq: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "koszulq: " << e.what() << "\n";
    return 2;
  }
  const std::string text = render(report, spec.format);
  if (spec.output) {
    std::ofstream file(*spec.output, std::ios::binary);
    if (!file) {
      err << "koszulq: cannot write " << *spec.output << "\n";
      return 2;
    }
    file << text;
  } else {
    out << text;
  }
  return report.all_pass() ? 0 : 1;
}

}  // namespace kq
