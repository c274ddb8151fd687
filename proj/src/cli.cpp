#include "polycomp/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

#include "polycomp/error.hpp"
#include "polycomp/gcdengine.hpp"
#include "polycomp/ideals.hpp"
#include "polycomp/oracle.hpp"
#include "polycomp/spectrum.hpp"
#include "polycomp/text.hpp"

namespace polycomp {

namespace {

using json = nlohmann::ordered_json;

json premise_value(const PremiseValue& v) {
  return std::visit([](const auto& x) { return json(x); }, v);
}

std::string premise_text(const PremiseValue& v) {
  if (const bool* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  if (const std::int64_t* n = std::get_if<std::int64_t>(&v)) return std::to_string(*n);
  return std::get<std::string>(v);
}

json trace_json(const std::vector<TraceStep>& trace) {
  json out = json::array();
  for (const auto& step : trace) {
    json premises = json::object();
    for (const auto& p : step.premises) premises[p.field] = premise_value(p.value);
    out.push_back({{"cite", step.cite}, {"quote", step.quote}, {"premises", premises}});
  }
  return out;
}

json verdict_json(const Verdict& v) {
  json out{{"property", v.name()}, {"holds", v.holds}};
  if (v.property == Property::NGenerator) out["n"] = v.n;
  if (v.branch) out["branch"] = *v.branch;
  out["trace"] = trace_json(v.trace);
  return out;
}

void trace_text(std::ostream& os, const std::vector<TraceStep>& trace) {
  for (const auto& step : trace) {
    os << "  [" << step.cite << "] " << step.quote;
    if (!step.premises.empty()) {
      os << " {";
      for (std::size_t i = 0; i < step.premises.size(); ++i) {
        if (i > 0) os << ", ";
        os << step.premises[i].field << "=" << premise_text(step.premises[i].value);
      }
      os << "}";
    }
    os << "\n";
  }
}

void verdict_text(std::ostream& os, const Verdict& v) {
  os << v.name() << ": " << (v.holds ? "true" : "false");
  if (v.branch) os << " (branch " << *v.branch << ")";
  os << "\n";
  trace_text(os, v.trace);
}

json strings(const std::vector<CompositeElement>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(x.str());
  return out;
}

std::string joined(const std::vector<std::string>& xs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += sep;
    out += xs[i];
  }
  return out;
}

std::vector<std::string> element_strings(const std::vector<CompositeElement>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(x.str());
  return out;
}

// Result of a verb: a JSON document and its text rendering.
struct Rendered {
  json doc;
  std::string text;
};

struct Session {
  std::string ring_text;
  bool as_json = false;
  PairRef pair;
  // Verdict shown alongside configuration errors.
  std::function<Verdict()> config_verdict;

  CompositeElement element(const std::string& s) const { return CompositeElement(pair, parse_poly(s)); }

  FGIdeal ideal(const std::string& s) const {
    std::vector<CompositeElement> gens;
    for (auto& g : parse_ideal(s)) gens.emplace_back(pair, std::move(g));
    return FGIdeal(std::move(gens));
  }

  PrimeDescriptor prime(const std::string& s) const {
    PrimeSyntax p = parse_prime(s);
    switch (p.kind) {
      case PrimeSyntax::Kind::Zero: return PrimeDescriptor::zero();
      case PrimeSyntax::Kind::M: return PrimeDescriptor::m();
      case PrimeSyntax::Kind::T: return PrimeDescriptor::from_t(p.f);
      case PrimeSyntax::Kind::K: break;
    }
    std::vector<QuadElement> gens;
    for (const auto& g : p.gens) {
      if (g.degree() > 0 || !k_membership(g.constant(), pair->k_tag)) {
        fail(ErrorCode::NotInRing, g.str() + " is not an element of " + pair->k_tag.str());
      }
      gens.push_back(g.constant());
    }
    return PrimeDescriptor::over_m(KIdeal(pair->k_tag, gens));
  }

  json head() const { return json{{"ring", pair->str()}}; }
};

const Property kFiveProperties[] = {Property::Coherent, Property::Noetherian, Property::Prufer,
                                    Property::Bezout, Property::GCD};

Rendered run_props(Session& s, std::optional<std::int64_t> ngen) {
  std::vector<Verdict> verdicts;
  for (Property p : kFiveProperties) verdicts.push_back(decide_property(*s.pair, p));
  if (ngen) verdicts.push_back(decide_n_generator(*s.pair, *ngen));
  Rendered r{s.head(), ""};
  r.doc["verdicts"] = json::array();
  std::ostringstream text;
  for (const auto& v : verdicts) {
    r.doc["verdicts"].push_back(verdict_json(v));
    verdict_text(text, v);
  }
  r.text = text.str();
  return r;
}

Rendered run_gcd(Session& s, const std::string& a_text, const std::string& b_text) {
  s.config_verdict = [&s] { return decide_property(*s.pair, Property::GCD); };
  const CompositeElement a = s.element(a_text);
  const CompositeElement b = s.element(b_text);
  GcdResult g = gcd_composite(a, b);
  Rendered r{s.head(), g.g.str() + "\n"};
  r.doc["a"] = a.str();
  r.doc["b"] = b.str();
  r.doc["gcd"] = g.g.str();
  if (g.cofactors) {
    r.doc["cofactors"] = json::array({g.cofactors->first.str(), g.cofactors->second.str()});
  } else {
    r.doc["cofactors"] = nullptr;
  }
  return r;
}

Rendered run_lcm(Session& s, const std::string& a_text, const std::string& b_text) {
  s.config_verdict = [&s] { return decide_property(*s.pair, Property::GCD); };
  const CompositeElement a = s.element(a_text);
  const CompositeElement b = s.element(b_text);
  const CompositeElement l = lcm_composite(a, b);
  Rendered r{s.head(), l.str() + "\n"};
  r.doc["a"] = a.str();
  r.doc["b"] = b.str();
  r.doc["lcm"] = l.str();
  return r;
}

Rendered run_divides(Session& s, const std::string& b_text, const std::string& a_text) {
  const CompositeElement b = s.element(b_text);
  const CompositeElement a = s.element(a_text);
  auto q = divides(b, a);
  Rendered r{s.head(), q ? "true\nquotient: " + q->str() + "\n" : "false\n"};
  r.doc["divisor"] = b.str();
  r.doc["dividend"] = a.str();
  r.doc["divides"] = q.has_value();
  r.doc["quotient"] = q ? json(q->str()) : json(nullptr);
  return r;
}

std::string status_name(MembershipResult::Status st) {
  switch (st) {
    case MembershipResult::Status::Member: return "Member";
    case MembershipResult::Status::NotMember: return "NotMember";
    case MembershipResult::Status::NotMemberWithinBound: return "NotMemberWithinBound";
  }
  return "?";
}

Rendered run_member(Session& s, const std::string& x_text, const std::string& ideal_text) {
  const CompositeElement x = s.element(x_text);
  const FGIdeal ideal = s.ideal(ideal_text);
  MembershipResult m = membership(x, ideal);
  Rendered r{s.head(), status_name(m.status) + "\n"};
  r.doc["element"] = x.str();
  r.doc["ideal"] = ideal.str();
  r.doc["status"] = status_name(m.status);
  r.doc["member"] = m.member();
  if (m.witness) {
    r.doc["witness"] = strings(*m.witness);
    r.text += "witness: " + joined(element_strings(*m.witness), "; ") + "\n";
  } else {
    r.doc["witness"] = nullptr;
  }
  return r;
}

Rendered run_normalize(Session& s, const std::string& ideal_text) {
  const FGIdeal ideal = s.ideal(ideal_text);
  IdealNormalForm nf = normalize_ideal(ideal);
  const KIdeal j = nf.j_ideal(s.pair->k_tag);
  std::vector<std::string> lambdas;
  std::vector<std::string> tails;
  for (const auto& l : nf.lambdas) lambdas.push_back(l.str());
  for (const auto& t : nf.tails) tails.push_back(t.str());
  Rendered r{s.head(), ""};
  r.doc["ideal"] = ideal.str();
  r.doc["b"] = nf.b.str();
  r.doc["b_witness"] = strings(nf.b_witness);
  r.doc["lambdas"] = lambdas;
  r.doc["tails"] = tails;
  r.doc["j"] = j.str();
  r.text = "b: " + nf.b.str() + "\nwitness: " + joined(element_strings(nf.b_witness), "; ") +
           "\nlambdas: " + joined(lambdas, "; ") + "\ntails: " + joined(tails, "; ") + "\nJ: " + j.str() +
           "\n";
  return r;
}

Rendered run_reduce(Session& s, const std::string& ideal_text, std::optional<std::int64_t> ngen) {
  s.config_verdict = [&s, ngen] {
    return ngen ? decide_n_generator(*s.pair, *ngen) : decide_property(*s.pair, Property::Prufer);
  };
  const FGIdeal ideal = s.ideal(ideal_text);
  const FGIdeal reduced = reduce_generators(ideal, ngen);
  Rendered r{s.head(), reduced.str() + "\n"};
  r.doc["ideal"] = ideal.str();
  r.doc["reduced"] = reduced.str();
  r.doc["generators"] = strings(reduced.gens());
  return r;
}

Rendered run_intersect(Session& s, const std::string& a_text, const std::string& b_text) {
  s.config_verdict = [&s] { return decide_property(*s.pair, Property::Bezout); };
  const FGIdeal a = s.ideal(a_text);
  const FGIdeal b = s.ideal(b_text);
  const FGIdeal meet = ideal_intersect(a, b);
  Rendered r{s.head(), meet.str() + "\n"};
  r.doc["a"] = a.str();
  r.doc["b"] = b.str();
  r.doc["intersection"] = meet.str();
  return r;
}

Rendered run_class(Session& s, const std::optional<std::string>& ideal_text) {
  s.config_verdict = [&s] { return decide_property(*s.pair, Property::Prufer); };
  Rendered r{s.head(), ""};
  if (!ideal_text) {
    ClassGroupSequence seq = class_group_sequence(*s.pair);
    r.doc["k_group"] = seq.k_group.str();
    r.doc["r_group"] = seq.r_group.str();
    r.doc["t_group"] = seq.t_group.str();
    r.doc["trace"] = trace_json(seq.trace);
    std::ostringstream text;
    text << "C(K) = " << seq.k_group.str() << " -> C(R) = " << seq.r_group.str() << " -> C(L[X]) = "
         << seq.t_group.str() << "\n";
    trace_text(text, seq.trace);
    r.text = text.str();
    return r;
  }
  const FGIdeal ideal = s.ideal(*ideal_text);
  const IdealClass c = ideal_class(ideal);
  r.doc["ideal"] = ideal.str();
  r.doc["class"] = c.str();
  r.doc["group"] = c.group.str();
  r.doc["index"] = c.index;
  r.text = c.str() + "\n";
  return r;
}

json chain_links_json(const PrimeChain& chain) {
  json links = json::array();
  for (const auto& link : chain.links) links.push_back(link.str());
  return links;
}

json separators_json(const PrimeChain& chain) {
  json out = json::array();
  for (std::size_t i = 0; i < chain.separators.size(); ++i) {
    out.push_back({{"element", chain.separators[i].str()},
                   {"in", chain.links[i + 1].str()},
                   {"not_in", chain.links[i].str()}});
  }
  return out;
}

std::string chain_text(const PrimeChain& chain) {
  std::vector<std::string> links;
  for (const auto& link : chain.links) links.push_back(link.str());
  std::string out = "chain: " + joined(links, " < ") + "\n";
  for (std::size_t i = 0; i < chain.separators.size(); ++i) {
    out += "  " + chain.separators[i].str() + " in " + chain.links[i + 1].str() + ", not in " +
           chain.links[i].str() + "\n";
  }
  return out;
}

json report_json(const PrimeDescriptor& q, const PrimeReport& rep) {
  return {{"prime", q.str()},          {"branch", rep.branch},     {"contraction", rep.contraction},
          {"contains_m", rep.contains_m}, {"equals_m", rep.equals_m}, {"maximal", rep.maximal},
          {"height", rep.height},       {"quotient", rep.quotient}};
}

std::string report_text(const PrimeDescriptor& q, const PrimeReport& rep) {
  std::ostringstream os;
  os << q.str() << ": " << rep.branch << ", contraction " << rep.contraction << ", height " << rep.height
     << (rep.maximal ? ", maximal" : "") << (rep.equals_m ? ", equals M" : rep.contains_m ? ", contains M" : "")
     << ", quotient " << rep.quotient << "\n";
  return os.str();
}

Rendered run_dim(Session& s) {
  const std::int64_t dim = krull_dim(*s.pair);
  const PrimeChain chain = witness_chain(s.pair);
  Rendered r{s.head(), std::to_string(dim) + "\n" + chain_text(chain)};
  r.doc["dim"] = dim;
  r.doc["chain"] = chain_links_json(chain);
  r.doc["separators"] = separators_json(chain);
  return r;
}

Rendered run_chain(Session& s) {
  const PrimeChain chain = witness_chain(s.pair);
  Rendered r{s.head(), chain_text(chain)};
  r.doc["length"] = chain.links.size() - 1;
  r.doc["chain"] = json::array();
  for (const auto& link : chain.links) {
    const PrimeReport rep = classify_prime(*s.pair, link);
    r.doc["chain"].push_back(report_json(link, rep));
    r.text += report_text(link, rep);
  }
  r.doc["separators"] = separators_json(chain);
  return r;
}

Rendered run_classify(Session& s, const std::string& prime_text) {
  const PrimeDescriptor q = s.prime(prime_text);
  const PrimeReport rep = classify_prime(*s.pair, q);
  json doc = s.head();
  const json report = report_json(q, rep);
  for (const auto& [k, v] : report.items()) doc[k] = v;
  return {doc, report_text(q, rep)};
}

Rendered run_dichotomy(Session& s) {
  const Verdict v = decide_dichotomy(*s.pair);
  Rendered r{s.head(), ""};
  const json verdict = verdict_json(v);
  for (const auto& [k, val] : verdict.items()) r.doc[k] = val;
  std::ostringstream text;
  verdict_text(text, v);
  r.text = text.str();
  return r;
}

bool is_configuration_error(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotGCDConfiguration:
    case ErrorCode::NotBezoutConfiguration:
    case ErrorCode::NotPruferConfiguration:
    case ErrorCode::NotNGeneratorConfiguration:
      return true;
    default:
      return false;
  }
}

void report_parse_error(const Session& s, const ParseError& e, std::ostream& err) {
  if (s.as_json) {
    json doc{{"error", "ParseError"},
             {"input", e.input()},
             {"position", e.position()},
             {"expected", e.expected()}};
    err << doc.dump(2) << "\n";
  } else {
    err << "error: ParseError: " << e.what() << "\n";
  }
}

void report_domain_error(const Session& s, const Error& e, std::ostream& err) {
  std::optional<Verdict> verdict;
  if (is_configuration_error(e.code()) && s.config_verdict && s.pair) {
    try {
      verdict = s.config_verdict();
    } catch (const Error&) {
    }
  }
  if (s.as_json) {
    json doc{{"error", std::string(e.name())}, {"message", e.what()}};
    if (verdict) doc["verdict"] = verdict_json(*verdict);
    err << doc.dump(2) << "\n";
  } else {
    err << "error: " << e.name() << ": " << e.what() << "\n";
    if (verdict) verdict_text(err, *verdict);
  }
}

}  // namespace

// Operands such as "-X^2 + 1" look like short flags to CLI11, so options are
// moved in front of a "--" and every operand goes after it.
static std::vector<std::string> operands_last(const std::vector<std::string>& args) {
  if (args.empty() || args.front().starts_with("-")) return args;
  std::vector<std::string> opts{args.front()};
  std::vector<std::string> operands;
  for (std::size_t i = 1; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--") {
      operands.insert(operands.end(), args.begin() + static_cast<std::ptrdiff_t>(i) + 1, args.end());
      break;
    }
    if ((a == "--ring" || a == "--ngen") && i + 1 < args.size()) {
      opts.push_back(a);
      opts.push_back(args[++i]);
    } else if (a.starts_with("--") || a == "-h") {
      opts.push_back(a);
    } else {
      operands.push_back(a);
    }
  }
  if (!operands.empty()) {
    opts.emplace_back("--");
    opts.insert(opts.end(), operands.begin(), operands.end());
  }
  return opts;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact arithmetic in K + X*L[X]", "polycomp"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every verb");

  Session s;
  std::optional<std::int64_t> ngen;
  std::string x1, x2;
  std::optional<std::string> opt_ideal;
  std::function<Rendered()> action;

  auto verb = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--ring", s.ring_text, "Ring descriptor, e.g. \"Z + X*Q[X]\"")->required();
    sub->add_flag("--json", s.as_json, "Emit JSON");
    return sub;
  };

  CLI::App* props = verb("props", "Decide the five ring properties (and optionally n-generator)");
  props->add_option("--ngen", ngen, "Also decide the n-generator property")->check(CLI::PositiveNumber);
  props->callback([&] { action = [&] { return run_props(s, ngen); }; });

  CLI::App* gcd = verb("gcd", "Greatest common divisor");
  gcd->add_option("a", x1)->required();
  gcd->add_option("b", x2)->required();
  gcd->callback([&] { action = [&] { return run_gcd(s, x1, x2); }; });

  CLI::App* lcm = verb("lcm", "Least common multiple");
  lcm->add_option("a", x1)->required();
  lcm->add_option("b", x2)->required();
  lcm->callback([&] { action = [&] { return run_lcm(s, x1, x2); }; });

  CLI::App* div = verb("divides", "Does the first element divide the second in R");
  div->add_option("divisor", x1)->required();
  div->add_option("dividend", x2)->required();
  div->callback([&] { action = [&] { return run_divides(s, x1, x2); }; });

  CLI::App* member = verb("member", "Ideal membership with witness");
  member->add_option("element", x1)->required();
  member->add_option("ideal", x2)->required();
  member->callback([&] { action = [&] { return run_member(s, x1, x2); }; });

  CLI::App* normalize = verb("normalize", "Normal form b*J*R of an ideal");
  normalize->add_option("ideal", x1)->required();
  normalize->callback([&] { action = [&] { return run_normalize(s, x1); }; });

  CLI::App* reduce = verb("reduce", "Reduce the generator count");
  reduce->add_option("ideal", x1)->required();
  reduce->add_option("--ngen", ngen, "Target generator count")->check(CLI::PositiveNumber);
  reduce->callback([&] { action = [&] { return run_reduce(s, x1, ngen); }; });

  CLI::App* intersect = verb("intersect", "Intersection of two ideals");
  intersect->add_option("a", x1)->required();
  intersect->add_option("b", x2)->required();
  intersect->callback([&] { action = [&] { return run_intersect(s, x1, x2); }; });

  CLI::App* cls = verb("class", "Ideal class, or the class-group sequence without an ideal");
  cls->add_option("ideal", opt_ideal);
  cls->callback([&] { action = [&] { return run_class(s, opt_ideal); }; });

  CLI::App* dim = verb("dim", "Krull dimension with a witness chain");
  dim->callback([&] { action = [&] { return run_dim(s); }; });

  CLI::App* chain = verb("chain", "Witness chain with per-link classification");
  chain->callback([&] { action = [&] { return run_chain(s); }; });

  CLI::App* classify = verb("classify-prime", "Classify a prime of R");
  classify->add_option("prime", x1)->required();
  classify->callback([&] { action = [&] { return run_classify(s, x1); }; });

  CLI::App* dich = verb("dichotomy", "Finite-conductor dichotomy");
  dich->callback([&] { action = [&] { return run_dichotomy(s); }; });

  try {
    const std::vector<std::string> ordered = operands_last(args);
    std::vector<std::string> reversed(ordered.rbegin(), ordered.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (std::find(args.begin(), args.end(), "--json") != args.end()) {
      nlohmann::ordered_json doc{{"error", "UsageError"}, {"message", e.what()}};
      err << doc.dump(2) << "\n";
    } else {
      err << "error: UsageError: " << e.what() << "\n";
    }
    return kExitParse;
  }

  try {
    RingSyntax ring = parse_ring(s.ring_text);
    s.pair = make_pair_ref(ring.k, ring.l);
    Rendered r = action();
    if (s.as_json) {
      out << r.doc.dump(2) << "\n";
    } else {
      out << r.text;
    }
    return kExitOk;
  } catch (const ParseError& e) {
    report_parse_error(s, e, err);
    return kExitParse;
  } catch (const Error& e) {
    report_domain_error(s, e, err);
    return kExitDomain;
  }
}

}  // namespace polycomp
