#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "polycomp/ringdesc.hpp"

namespace polycomp {

enum class Property { Coherent, Noetherian, Prufer, Bezout, GCD, NGenerator, FiniteConductorBranch };

std::string property_name(Property p, std::int64_t n = 0);

using PremiseValue = std::variant<bool, std::int64_t, std::string>;

struct Premise {
  std::string field;  // descriptor field the premise was read from
  PremiseValue value;
};

struct TraceStep {
  std::string cite;   // stable id, e.g. "bezout.polynomial"
  std::string quote;  // the biconditional being applied
  std::vector<Premise> premises;
};

struct Verdict {
  Property property = Property::Coherent;
  std::int64_t n = 0;         // for NGenerator
  bool holds = false;
  std::optional<std::string> branch;  // "a", "b" or "NotFiniteConductor" for the dichotomy
  std::vector<TraceStep> trace;

  std::string name() const { return property_name(property, n); }
};

/// Evaluates the right-hand side of the characterization for `prop` on the
/// descriptor. Throws InsufficientData if a referenced flag is unknown.
/// NGenerator is decided by decide_n_generator and FiniteConductorBranch by
/// decide_dichotomy.
Verdict decide_property(const GeneralComposite& c, Property prop);
/// Same, using the T = L[X] specializations with the L[X] facts supplied.
Verdict decide_property(const CompositePair& c, Property prop);

/// Trace-free evaluation for hot paths; agrees with decide_property(...).holds.
bool property_holds(const CompositePair& c, Property prop);

Verdict decide_n_generator(const GeneralComposite& c, std::int64_t n);
Verdict decide_n_generator(const CompositePair& c, std::int64_t n);
bool n_generator_holds(const CompositePair& c, std::int64_t n);

/// Finite-conductor dichotomy. branch is "a", "b" or "NotFiniteConductor";
/// holds is true iff a branch applies.
Verdict decide_dichotomy(const GeneralComposite& c);
Verdict decide_dichotomy(const CompositePair& c);

struct ClassGroupSequence {
  ClassGroup k_group;
  ClassGroup t_group;
  ClassGroup r_group;
  std::vector<TraceStep> trace;
};

/// C(K) -> C(R) -> C(L[X]) with C(L[X]) trivial. Throws NotPruferConfiguration
/// or UnknownClassGroup.
ClassGroupSequence class_group_sequence(const CompositePair& c);

}  // namespace polycomp
