#include "bandq/verdict.hpp"

namespace bandq {

const char* answer_name(Answer a) noexcept {
  switch (a) {
    case Answer::Yes: return "yes";
    case Answer::No: return "no";
    case Answer::Undecided: return "undecided";
  }
  return "undecided";
}

ClassVerdict make_verdict(Answer answer, std::string rule, std::string condition) {
  ClassVerdict v;
  v.answer = answer;
  v.certificate.rule = std::move(rule);
  v.certificate.condition = std::move(condition);
  return v;
}

bool contradicts(const ClassVerdict& a, const ClassVerdict& b) noexcept {
  return (a.yes() && b.no()) || (a.no() && b.yes());
}

nlohmann::json to_json(const ClassVerdict& v) {
  nlohmann::json witness = nlohmann::json::object();
  for (const auto& [name, vec] : v.certificate.vectors) {
    auto arr = nlohmann::json::array();
    for (const auto& x : vec) arr.push_back(to_string(x));
    witness[name] = std::move(arr);
  }
  for (const auto& [name, s] : v.certificate.scalars) witness[name] = to_string(s);
  for (const auto& [name, s] : v.certificate.notes) witness[name] = s;
  return {{"answer", answer_name(v.answer)},
          {"theorem", v.certificate.rule},
          {"condition", v.certificate.condition},
          {"witness", std::move(witness)}};
}

}  // namespace bandq
