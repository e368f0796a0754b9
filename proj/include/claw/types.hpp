#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "claw/common.hpp"

namespace claw {

enum class ObjectKind { candy, garlic };

inline const char* object_name(ObjectKind o) {
  return o == ObjectKind::candy ? "candy" : "garlic";
}
ObjectKind object_from_name(std::string_view name);

// Binary threshold decision: keep grasping or terminate.
enum class Label { proceed, stop };

inline const char* label_name(Label l) {
  return l == Label::proceed ? "continue" : "stop";
}
Label label_from_name(std::string_view name);

// The four discrete directives the monitor can emit. This is the sole
// channel from the monitor to the policy.
enum class PromptKlass : int {
  continue_candy = 0,
  stop_candy = 1,
  continue_garlic = 2,
  stop_garlic = 3,
};

const char* prompt_klass_name(PromptKlass k);
PromptKlass prompt_klass_from_name(std::string_view name);
// Canonical prompt string for each class (exactly one of the four task
// prompts; klass <-> text is a bijection).
const std::string& prompt_canonical_text(PromptKlass k);
PromptKlass prompt_klass_from_text(std::string_view text);

PromptKlass make_prompt_klass(Label decision, ObjectKind object);
inline Label prompt_decision(PromptKlass k) {
  return (k == PromptKlass::continue_candy || k == PromptKlass::continue_garlic)
             ? Label::proceed
             : Label::stop;
}
inline ObjectKind prompt_object(PromptKlass k) {
  return (k == PromptKlass::continue_candy || k == PromptKlass::stop_candy)
             ? ObjectKind::candy
             : ObjectKind::garlic;
}

struct PromptDirective {
  PromptKlass klass;
  std::string text;    // canonical string for klass
  double issued_at{};  // virtual time, seconds

  static PromptDirective make(PromptKlass k, double t) {
    return {k, prompt_canonical_text(k), t};
  }
};

// "load {k} g {object} for me."
struct Instruction {
  std::string text;
  int requested_g{};
  ObjectKind object{};
};

// Structured scene observation consumed by the policy. The scale reading is
// excluded unless expose_scale is set, so the policy architecture cannot
// stop on weight by itself.
struct Observation {
  std::array<double, 4> left_arm{};   // x, y, z, grip
  std::array<double, 4> right_arm{};  // x, y, z, grip
  std::array<double, 2> bowl_xy{};
  double grasp_count_norm{};              // grasps so far / 12, clamped
  std::array<double, 4> prompt_onehot{};  // all-zero in baseline mode
  std::optional<double> scale_reading_norm;

  static int dim(bool expose_scale) { return expose_scale ? 16 : 15; }
  int dim() const { return dim(scale_reading_norm.has_value()); }
  std::vector<double> flatten() const;
};

// 50 consecutive 8-D dual-arm action rows from one flow integration.
struct ActionChunk {
  static constexpr int kSteps = 50;
  static constexpr int kDims = 8;
  static constexpr int kFlat = kSteps * kDims;

  std::vector<double> actions;  // kSteps x kDims, row-major, entries in [0,1]
  double generated_at{};
  std::optional<PromptKlass> conditioned_prompt;

  std::span<const double> row(int i) const {
    return {actions.data() + static_cast<size_t>(i) * kDims, kDims};
  }
  std::span<double> row(int i) {
    return {actions.data() + static_cast<size_t>(i) * kDims, kDims};
  }
};

enum class TaskKind { candy, garlic, mixed_candy, mixed_garlic };

const char* task_name(TaskKind t);
TaskKind task_from_name(std::string_view name);
inline ObjectKind task_object(TaskKind t) {
  return (t == TaskKind::candy || t == TaskKind::mixed_candy)
             ? ObjectKind::candy
             : ObjectKind::garlic;
}

struct DemoFrame {
  Observation obs;        // prompt_onehot already set to the frame label
  PromptKlass label;
  ActionChunk target;     // expert actions from this frame onward
};

struct Demonstration {
  std::vector<DemoFrame> frames;
  TaskKind task{};
  int episode_id{};
  int grasp_count{};  // completed grasps in the episode
};

}  // namespace claw
