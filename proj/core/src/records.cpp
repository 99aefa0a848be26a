#include "mazurlab/records.hpp"

#include "mazurlab/errors.hpp"

#include <array>
#include <limits>
#include <utility>

namespace mazurlab {

namespace {

constexpr std::array<std::pair<Lemma, const char*>, 11> kLemmaNames{{
    {Lemma::power_contraction, "power_contraction"},
    {Lemma::power_expansion, "power_expansion"},
    {Lemma::alpha_lipschitz, "alpha_lipschitz"},
    {Lemma::commutator_up, "commutator_up"},
    {Lemma::commutator_down, "commutator_down"},
    {Lemma::anticommutator_up, "anticommutator_up"},
    {Lemma::anticommutator_down, "anticommutator_down"},
    {Lemma::jensen_chain, "jensen_chain"},
    {Lemma::selfadjoint_commutator, "selfadjoint_commutator"},
    {Lemma::mazur_theorem, "mazur_theorem"},
    {Lemma::holder_product, "holder_product"},
}};

}  // namespace

const char* lemma_name(Lemma l) {
  for (const auto& [id, name] : kLemmaNames)
    if (id == l) return name;
  return "unknown";
}

Lemma lemma_from_name(const std::string& name) {
  for (const auto& [id, n] : kLemmaNames)
    if (name == n) return id;
  throw ConfigError("unknown lemma name: " + name);
}

bool lemma_has_explicit_constant(Lemma l) {
  switch (l) {
    case Lemma::power_contraction:
    case Lemma::power_expansion:
    case Lemma::alpha_lipschitz:
    case Lemma::commutator_up:
    case Lemma::commutator_down:
    case Lemma::jensen_chain:
    case Lemma::holder_product:
      return true;
    default:
      return false;
  }
}

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::skipped_degenerate:
      return "skipped_degenerate";
    case CheckStatus::error:
      return "error";
  }
  return "unknown";
}

void CheckRecord::finalize(double cap) {
  const bool degenerate = rhs_structural < kDegenerateRhs;
  ratio = degenerate ? nan_value() : lhs / rhs_structural;
  if (!empirical()) {
    status = inequality_holds(lhs, constant * rhs_structural) ? CheckStatus::pass
                                                              : CheckStatus::fail;
  } else if (degenerate) {
    status = CheckStatus::skipped_degenerate;
  } else {
    status = (ratio <= cap) ? CheckStatus::pass : CheckStatus::fail;
  }
}

}  // namespace mazurlab
