#include "claw/types.hpp"

#include <algorithm>

namespace claw {

namespace {
const std::string kPromptTexts[4] = {
    "Continue to pick up the candy",
    "Stop picking up the candy and take the bowl away",
    "Continue to pick up the garlic",
    "Stop picking up the garlic and take the bowl away",
};
const char* kPromptNames[4] = {"continue_candy", "stop_candy",
                               "continue_garlic", "stop_garlic"};
}  // namespace

ObjectKind object_from_name(std::string_view name) {
  if (name == "candy") return ObjectKind::candy;
  if (name == "garlic") return ObjectKind::garlic;
  throw ParseError("unknown object '" + std::string(name) +
                   "' (expected candy or garlic)");
}

Label label_from_name(std::string_view name) {
  if (name == "continue") return Label::proceed;
  if (name == "stop") return Label::stop;
  throw ParseError("unknown label '" + std::string(name) +
                   "' (expected continue or stop)");
}

const char* prompt_klass_name(PromptKlass k) {
  return kPromptNames[static_cast<int>(k)];
}

PromptKlass prompt_klass_from_name(std::string_view name) {
  for (int i = 0; i < 4; ++i) {
    if (name == kPromptNames[i]) return static_cast<PromptKlass>(i);
  }
  throw ParseError("unknown prompt class '" + std::string(name) + "'");
}

const std::string& prompt_canonical_text(PromptKlass k) {
  return kPromptTexts[static_cast<int>(k)];
}

PromptKlass prompt_klass_from_text(std::string_view text) {
  for (int i = 0; i < 4; ++i) {
    if (text == kPromptTexts[i]) return static_cast<PromptKlass>(i);
  }
  throw ParseError("text is not one of the four canonical prompts");
}

PromptKlass make_prompt_klass(Label decision, ObjectKind object) {
  if (object == ObjectKind::candy) {
    return decision == Label::proceed ? PromptKlass::continue_candy
                                      : PromptKlass::stop_candy;
  }
  return decision == Label::proceed ? PromptKlass::continue_garlic
                                    : PromptKlass::stop_garlic;
}

std::vector<double> Observation::flatten() const {
  std::vector<double> v;
  v.reserve(16);
  v.insert(v.end(), left_arm.begin(), left_arm.end());
  v.insert(v.end(), right_arm.begin(), right_arm.end());
  v.insert(v.end(), bowl_xy.begin(), bowl_xy.end());
  v.push_back(grasp_count_norm);
  v.insert(v.end(), prompt_onehot.begin(), prompt_onehot.end());
  if (scale_reading_norm) v.push_back(*scale_reading_norm);
  return v;
}

const char* task_name(TaskKind t) {
  switch (t) {
    case TaskKind::candy: return "candy";
    case TaskKind::garlic: return "garlic";
    case TaskKind::mixed_candy: return "mixed-candy";
    case TaskKind::mixed_garlic: return "mixed-garlic";
  }
  return "?";
}

TaskKind task_from_name(std::string_view name) {
  if (name == "candy") return TaskKind::candy;
  if (name == "garlic") return TaskKind::garlic;
  if (name == "mixed-candy") return TaskKind::mixed_candy;
  if (name == "mixed-garlic") return TaskKind::mixed_garlic;
  throw ParseError("unknown task '" + std::string(name) + "'");
}

}  // namespace claw
