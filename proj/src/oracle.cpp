#include "polycomp/oracle.hpp"

#include "polycomp/error.hpp"

namespace polycomp {

namespace {

enum class Form { General, Polynomial };

struct Citation {
  const char* general_id;
  const char* general_quote;
  const char* poly_id;
  const char* poly_quote;

  std::string id(Form f) const { return f == Form::General ? general_id : poly_id; }
  std::string quote(Form f) const { return f == Form::General ? general_quote : poly_quote; }
};

const Citation kCoherent{
    "coherent.general",
    "R coherent <=> T coherent and exactly one of: (a) M f.g. in T, K a field, [L:K] finite; "
    "(b) L = qf(K), K coherent, T_M a valuation domain",
    "coherent.polynomial",
    "K+XL[X] coherent <=> L[X] coherent and exactly one of: (a) XL[X] f.g., K a field, [L:K] "
    "finite; (b) L = qf(K), K coherent, L[X]_(X) a valuation domain"};
const Citation kCoherentA{"coherent.general.a", "branch (a): M f.g. in T, K a field, [L:K] finite", "coherent.polynomial.a",
                          "branch (a): XL[X] f.g., K a field, [L:K] finite"};
const Citation kCoherentB{"coherent.general.b", "branch (b): L = qf(K), K coherent, T_M a valuation domain",
                          "coherent.polynomial.b",
                          "branch (b): L = qf(K), K coherent, L[X]_(X) a valuation domain"};
const Citation kNoetherian{"noetherian.general", "R Noetherian <=> T Noetherian, K a field, [L:K] finite",
                           "noetherian.polynomial", "K+XL[X] Noetherian <=> [L:K] finite"};
const Citation kPrufer{"prufer.general", "R Prufer <=> T Prufer, L = qf(K), K Prufer", "prufer.polynomial",
                       "K+XL[X] Prufer <=> L[X] Prufer, L = qf(K), K Prufer"};
const Citation kBezout{"bezout.general", "R Bezout <=> T Bezout, L = qf(K), K Bezout", "bezout.polynomial",
                       "K+XL[X] Bezout <=> L = qf(K), K Bezout"};
const Citation kGcd{"gcd.general", "R GCD <=> T GCD, L = qf(K), K GCD, T_M a valuation domain", "gcd.polynomial",
                    "K+XL[X] GCD <=> L = qf(K), K GCD, L[X]_(X) a valuation domain"};
const Citation kNGenerator{"n-generator.general", "R n-generator Prufer <=> T and K n-generator Prufer", "n-generator.polynomial",
                           "K+XL[X] n-generator Prufer <=> L[X] and K n-generator Prufer"};
const Citation kDichotomy{
    "dichotomy.general",
    "R finite conductor => exactly one of: (a) K a field, [L:K] finite, M f.g. in T; "
    "(b) L = qf(K), T_M a valuation domain",
    "dichotomy.polynomial",
    "K+XL[X] finite conductor => exactly one of: (a) K a field, [L:K] finite, XL[X] f.g.; "
    "(b) L = qf(K), L[X]_(X) a valuation domain"};
const Citation kFiniteConductor{"finite-conductor", "coherent domains and GCD domains are finite conductor domains",
                                "finite-conductor",
                                "coherent domains and GCD domains are finite conductor domains"};
const Citation kClassSequence{"class-sequence.general", "R Prufer => 1 -> C(K) -> C(R) -> C(T) -> 1 is exact",
                              "class-sequence.polynomial",
                              "K+XL[X] Prufer => 1 -> C(K) -> C(K+XL[X]) -> C(L[X]) -> 1 is exact"};

// Reads descriptor premises, failing on unknown values and optionally
// recording every value read into the current trace step.
class Reader {
 public:
  Reader(const GeneralComposite& c, bool record) : c_(c), record_(record) {}

  bool flag(const std::optional<bool>& f, const char* field) {
    if (!f) fail(ErrorCode::InsufficientData, std::string(field) + " is unknown");
    note(field, *f);
    return *f;
  }

  std::int64_t count(const std::optional<std::int64_t>& v, const char* field) {
    if (!v) fail(ErrorCode::InsufficientData, std::string(field) + " is unknown");
    note(field, *v);
    return *v;
  }

  const LRelation& relation() {
    if (c_.l_relation.kind == LRelation::Kind::Unknown) {
      fail(ErrorCode::InsufficientData, "l_relation is unknown");
    }
    note("l_relation", c_.l_relation.str());
    return c_.l_relation;
  }

  bool quotient_field() { return relation().kind == LRelation::Kind::QuotientField; }
  bool finite_extension() { return relation().kind == LRelation::Kind::FiniteExtension; }

  void note(const char* field, PremiseValue v) {
    if (record_) premises_.push_back({field, std::move(v)});
  }

  std::vector<Premise> take() { return std::exchange(premises_, {}); }

  const GeneralComposite& c() const { return c_; }
  bool recording() const { return record_; }

 private:
  const GeneralComposite& c_;
  bool record_;
  std::vector<Premise> premises_;
};

class Evaluation {
 public:
  Evaluation(const GeneralComposite& c, Form form, bool record) : r_(c, record), form_(form) {}

  void step(const Citation& cite) {
    if (r_.recording()) trace_.push_back({cite.id(form_), cite.quote(form_), r_.take()});
  }

  Reader& reader() { return r_; }
  const GeneralComposite& c() const { return r_.c(); }
  std::vector<TraceStep> take_trace() { return std::move(trace_); }

  bool coherent() {
    bool t_coherent = r_.flag(c().t_flags.is_coherent, "t_flags.is_coherent");
    step(kCoherent);
    bool a = r_.flag(c().m_finitely_generated, "m_finitely_generated") &
             r_.flag(c().k_flags.is_field, "k_flags.is_field") & r_.finite_extension();
    step(kCoherentA);
    bool b = r_.quotient_field() & r_.flag(c().k_flags.is_coherent, "k_flags.is_coherent") &
             r_.flag(c().t_m_is_valuation, "t_m_is_valuation");
    step(kCoherentB);
    return t_coherent && (a != b);
  }

  bool noetherian() {
    bool v = r_.flag(c().t_flags.is_noetherian, "t_flags.is_noetherian") &
             r_.flag(c().k_flags.is_field, "k_flags.is_field") & r_.finite_extension();
    step(kNoetherian);
    return v;
  }

  bool prufer() {
    bool v = r_.flag(c().t_flags.is_prufer, "t_flags.is_prufer") & r_.quotient_field() &
             r_.flag(c().k_flags.is_prufer, "k_flags.is_prufer");
    step(kPrufer);
    return v;
  }

  bool bezout() {
    bool v = r_.flag(c().t_flags.is_bezout, "t_flags.is_bezout") & r_.quotient_field() &
             r_.flag(c().k_flags.is_bezout, "k_flags.is_bezout");
    step(kBezout);
    return v;
  }

  bool gcd() {
    bool v = r_.flag(c().t_flags.is_gcd, "t_flags.is_gcd") & r_.quotient_field() &
             r_.flag(c().k_flags.is_gcd, "k_flags.is_gcd") &
             r_.flag(c().t_m_is_valuation, "t_m_is_valuation");
    step(kGcd);
    return v;
  }

  bool n_generator(std::int64_t n) {
    if (!prufer()) return false;
    std::int64_t t_n = r_.count(c().t_flags.n_generator, "t_flags.n_generator");
    std::int64_t k_n = r_.count(c().k_flags.n_generator, "k_flags.n_generator");
    r_.note("n", n);
    step(kNGenerator);
    return t_n <= n && k_n <= n;
  }

  bool evaluate(Property prop) {
    switch (prop) {
      case Property::Coherent: return coherent();
      case Property::Noetherian: return noetherian();
      case Property::Prufer: return prufer();
      case Property::Bezout: return bezout();
      case Property::GCD: return gcd();
      case Property::NGenerator:
      case Property::FiniteConductorBranch:
        break;
    }
    fail(ErrorCode::InsufficientData, "use decide_n_generator / decide_dichotomy");
  }

 private:
  Reader r_;
  Form form_;
  std::vector<TraceStep> trace_;
};

Verdict decide(const GeneralComposite& c, Property prop, Form form) {
  validate_general(c);
  Evaluation e(c, form, true);
  Verdict v;
  v.property = prop;
  v.holds = e.evaluate(prop);
  v.trace = e.take_trace();
  return v;
}

Verdict decide_n(const GeneralComposite& c, std::int64_t n, Form form) {
  if (n < 1) fail(ErrorCode::InsufficientData, "n-generator property needs n >= 1");
  validate_general(c);
  Evaluation e(c, form, true);
  Verdict v;
  v.property = Property::NGenerator;
  v.n = n;
  v.holds = e.n_generator(n);
  v.trace = e.take_trace();
  return v;
}

// Coherent or GCD => finite conductor. Unknown data on one route does not
// block the other.
std::optional<bool> finite_conductor(const GeneralComposite& c, Evaluation& e) {
  std::optional<bool> coherent, gcd;
  try {
    coherent = Evaluation(c, Form::General, false).coherent();
  } catch (const Error& err) {
    if (err.code() != ErrorCode::InsufficientData) throw;
  }
  try {
    gcd = Evaluation(c, Form::General, false).gcd();
  } catch (const Error& err) {
    if (err.code() != ErrorCode::InsufficientData) throw;
  }
  if (coherent) e.reader().note("verdict.Coherent", *coherent);
  if (gcd) e.reader().note("verdict.GCD", *gcd);
  e.step(kFiniteConductor);
  if ((coherent && *coherent) || (gcd && *gcd)) return true;
  if (coherent && gcd) return false;
  return std::nullopt;
}

Verdict dichotomy(const GeneralComposite& c, Form form) {
  validate_general(c);
  Evaluation e(c, form, true);
  Verdict v;
  v.property = Property::FiniteConductorBranch;
  auto fc = finite_conductor(c, e);
  if (!fc) fail(ErrorCode::InsufficientData, "finite-conductor status cannot be derived");
  if (!*fc) {
    v.holds = false;
    v.branch = "NotFiniteConductor";
    v.trace = e.take_trace();
    return v;
  }
  Reader& r = e.reader();
  bool a = r.flag(c.k_flags.is_field, "k_flags.is_field") & r.finite_extension() &
           r.flag(c.m_finitely_generated, "m_finitely_generated");
  bool b = r.quotient_field() & r.flag(c.t_m_is_valuation, "t_m_is_valuation");
  r.note("branch_a", a);
  r.note("branch_b", b);
  e.step(kDichotomy);
  ensure(a != b, "finite conductor composite must satisfy exactly one dichotomy branch");
  v.holds = true;
  v.branch = a ? "a" : "b";
  v.trace = e.take_trace();
  return v;
}

}  // namespace

std::string property_name(Property p, std::int64_t n) {
  switch (p) {
    case Property::Coherent: return "Coherent";
    case Property::Noetherian: return "Noetherian";
    case Property::Prufer: return "Prufer";
    case Property::Bezout: return "Bezout";
    case Property::GCD: return "GCD";
    case Property::NGenerator: return "NGenerator(" + std::to_string(n) + ")";
    case Property::FiniteConductorBranch: return "FiniteConductorBranch";
  }
  return "?";
}

Verdict decide_property(const GeneralComposite& c, Property prop) {
  return decide(c, prop, Form::General);
}

Verdict decide_property(const CompositePair& c, Property prop) {
  return decide(general_from_pair(c), prop, Form::Polynomial);
}

bool property_holds(const CompositePair& c, Property prop) {
  GeneralComposite g = general_from_pair(c);
  return Evaluation(g, Form::Polynomial, false).evaluate(prop);
}

Verdict decide_n_generator(const GeneralComposite& c, std::int64_t n) {
  return decide_n(c, n, Form::General);
}

Verdict decide_n_generator(const CompositePair& c, std::int64_t n) {
  return decide_n(general_from_pair(c), n, Form::Polynomial);
}

bool n_generator_holds(const CompositePair& c, std::int64_t n) {
  GeneralComposite g = general_from_pair(c);
  return Evaluation(g, Form::Polynomial, false).n_generator(n);
}

Verdict decide_dichotomy(const GeneralComposite& c) { return dichotomy(c, Form::General); }

Verdict decide_dichotomy(const CompositePair& c) {
  return dichotomy(general_from_pair(c), Form::Polynomial);
}

ClassGroupSequence class_group_sequence(const CompositePair& c) {
  Verdict prufer = decide_property(c, Property::Prufer);
  if (!prufer.holds) {
    fail(ErrorCode::NotPruferConfiguration, c.str() + " is not a Prufer domain");
  }
  if (!c.k_flags.class_group.known()) {
    fail(ErrorCode::UnknownClassGroup, "class group of " + c.k_tag.str() + " is not known");
  }
  ClassGroupSequence s;
  s.k_group = c.k_flags.class_group;
  s.t_group = polynomial_ring_flags().class_group;
  // Exactness with C(T) trivial makes C(K) -> C(R) an isomorphism.
  s.r_group = s.k_group;
  s.trace = prufer.trace;
  s.trace.push_back({kClassSequence.id(Form::Polynomial), kClassSequence.quote(Form::Polynomial),
                     {{"k_flags.class_group", s.k_group.str()},
                      {"t_flags.class_group", s.t_group.str()}}});
  return s;
}

}  // namespace polycomp
