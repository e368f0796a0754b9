#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "claw/types.hpp"

namespace claw::display {

struct NoiseParams {
  double pixel_sigma = 0.05;  // per-pixel Gaussian jitter
  double brightness = 0.2;    // global scale drawn from [1-b, 1+b]
  int jitter_px = 2;          // integer translation up to +-jitter_px per axis

  static NoiseParams none() { return {0.0, 0.0, 0}; }
};

// Rendered grayscale crop of the digital weight display.
struct ScaleImage {
  static constexpr int kHeight = 32;
  static constexpr int kWidth = 64;
  static constexpr int kPixels = kHeight * kWidth;

  std::vector<double> pixels;  // row-major, values in [0,1]
  int true_weight_g{};
  uint64_t render_seed{};

  double at(int row, int col) const { return pixels[row * kWidth + col]; }
};

// Seven-segment cell geometry, shared with the decoding oracle in the tests.
struct Glyphs {
  static constexpr int kCellW = 14;
  static constexpr int kCellH = 21;
  static constexpr int kThick = 3;
  static constexpr int kCellY0 = 5;
  // ones, tens, hundreds cell x-origins (right-aligned digits)
  static constexpr int kCellX0[3] = {48, 32, 16};
  // segment bitmask per digit, bit order A,B,C,D,E,F,G
  static constexpr uint8_t kDigitSegments[10] = {
      0b0111111, 0b0000110, 0b1011011, 0b1001111, 0b1100110,
      0b1101101, 0b1111101, 0b0000111, 0b1111111, 0b1101111};
  // segment boxes, cell-local {x0, y0, x1, y1} (half-open)
  static constexpr int kSegmentBox[7][4] = {
      {3, 0, 11, 3},    // A
      {11, 3, 14, 9},   // B
      {11, 12, 14, 18}, // C
      {3, 18, 11, 21},  // D
      {0, 12, 3, 18},   // E
      {0, 3, 3, 9},     // F
      {3, 9, 11, 12},   // G
  };
};

// Pure function of (weight_g, noise, seed). weight_g must lie in [0, 999].
ScaleImage render_display(int weight_g, const NoiseParams& noise,
                          uint64_t seed);

// continue iff reading_g < requested_g.
Label label_rule(int requested_g, int reading_g);

std::string instruction_text(int requested_g, ObjectKind object);
std::string caption_text(int weight_g);

// Parses "load {k} g {object} for me." (case-insensitive, flexible
// whitespace). Throws ParseError otherwise.
Instruction parse_instruction(const std::string& text);

enum class ObjectSet { candy_only, garlic_only, both };

struct ThresholdPair {
  int image_idx{};
  int requested_g{};
  ObjectKind object{};
  Label label{};
};

// Images plus (image, instruction, label) pairs; pairs reference images by
// index so the 2000 x N expansion does not copy pixels.
struct ThresholdDataset {
  std::vector<ScaleImage> images;
  std::vector<ThresholdPair> pairs;

  Instruction instruction_of(const ThresholdPair& p) const {
    return {instruction_text(p.requested_g, p.object), p.requested_g, p.object};
  }
};

struct DatasetParams {
  int num_images = 2000;
  int max_k = 50;
  int weight_cap = 100;       // uniform weight range for most images
  double far_fraction = 0.25; // share of images drawn from [0, 999] instead
  ObjectSet objects = ObjectSet::both;
  NoiseParams noise{};
};

ThresholdDataset build_threshold_dataset(const DatasetParams& params,
                                         uint64_t seed);

struct CaptionDataset {
  std::vector<ScaleImage> images;
  std::vector<std::string> captions;
};

// One caption per image; weights drawn uniformly over the full display
// range [0, 999].
CaptionDataset build_caption_dataset(int num_images, const NoiseParams& noise,
                                     uint64_t seed);

// Tab-separated dataset files: base-64 of 8-bit quantized pixels, true
// weight, instruction (or caption) text, and for threshold records a label.
void write_threshold_dataset(const ThresholdDataset& ds, std::ostream& out);
ThresholdDataset read_threshold_dataset(std::istream& in);
void write_caption_dataset(const CaptionDataset& ds, std::ostream& out);
CaptionDataset read_caption_dataset(std::istream& in);

}  // namespace claw::display
