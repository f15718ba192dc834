#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "bandq/rational.hpp"

namespace bandq {

enum class Answer { Yes, No, Undecided };

const char* answer_name(Answer a) noexcept;

/// Rule identifier plus the data that backs a decision: witness vectors,
/// index sets, derived scalars.
struct Certificate {
  std::string rule;
  std::string condition;
  std::map<std::string, RationalVector> vectors;
  std::map<std::string, Rational> scalars;
  std::map<std::string, std::string> notes;
};

struct ClassVerdict {
  Answer answer = Answer::Undecided;
  Certificate certificate;

  bool yes() const noexcept { return answer == Answer::Yes; }
  bool no() const noexcept { return answer == Answer::No; }
  bool decided() const noexcept { return answer != Answer::Undecided; }
};

ClassVerdict make_verdict(Answer answer, std::string rule, std::string condition);

/// True when the two verdicts give opposite definite answers.
bool contradicts(const ClassVerdict& a, const ClassVerdict& b) noexcept;

/// {"answer", "theorem", "condition", "witness": {...}}; rationals as strings.
nlohmann::json to_json(const ClassVerdict& v);

}  // namespace bandq
