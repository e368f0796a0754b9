#include "claw/display/display.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

namespace claw::display {

constexpr int Glyphs::kCellX0[3];
constexpr uint8_t Glyphs::kDigitSegments[10];
constexpr int Glyphs::kSegmentBox[7][4];

namespace {

void paint_digit(std::vector<double>& px, int digit, int cell_x0) {
  const uint8_t mask = Glyphs::kDigitSegments[digit];
  for (int s = 0; s < 7; ++s) {
    if (!(mask & (1 << s))) continue;
    const int* box = Glyphs::kSegmentBox[s];
    for (int y = box[1]; y < box[3]; ++y) {
      double* row = px.data() + (Glyphs::kCellY0 + y) * ScaleImage::kWidth;
      for (int x = box[0]; x < box[2]; ++x) row[cell_x0 + x] = 1.0;
    }
  }
}

std::vector<double> canonical_glyphs(int weight_g) {
  std::vector<double> px(ScaleImage::kPixels, 0.0);
  int w = weight_g;
  int cell = 0;  // ones first, right-aligned
  do {
    paint_digit(px, w % 10, Glyphs::kCellX0[cell]);
    w /= 10;
    ++cell;
  } while (w > 0);
  return px;
}

}  // namespace

ScaleImage render_display(int weight_g, const NoiseParams& noise,
                          uint64_t seed) {
  if (weight_g < 0 || weight_g > 999) {
    throw ShapeError("render_display: weight " + std::to_string(weight_g) +
                     " outside [0, 999]");
  }
  Rng rng(seed);
  const int j = noise.jitter_px;
  const int dx = j > 0 ? rng.uniform_int(-j, j) : 0;
  const int dy = j > 0 ? rng.uniform_int(-j, j) : 0;
  const double bright =
      noise.brightness > 0.0
          ? rng.uniform(1.0 - noise.brightness, 1.0 + noise.brightness)
          : 1.0;

  std::vector<double> canon = canonical_glyphs(weight_g);
  ScaleImage img;
  img.true_weight_g = weight_g;
  img.render_seed = seed;
  img.pixels.assign(ScaleImage::kPixels, 0.0);
  for (int y = 0; y < ScaleImage::kHeight; ++y) {
    const int sy = y - dy;
    if (sy < 0 || sy >= ScaleImage::kHeight) continue;
    for (int x = 0; x < ScaleImage::kWidth; ++x) {
      const int sx = x - dx;
      if (sx < 0 || sx >= ScaleImage::kWidth) continue;
      img.pixels[y * ScaleImage::kWidth + x] =
          canon[sy * ScaleImage::kWidth + sx] * bright;
    }
  }
  if (noise.pixel_sigma > 0.0) {
    for (double& p : img.pixels) p += rng.gaussian(0.0, noise.pixel_sigma);
  }
  for (double& p : img.pixels) p = std::clamp(p, 0.0, 1.0);
  return img;
}

Label label_rule(int requested_g, int reading_g) {
  if (requested_g < 1) throw ShapeError("label_rule: requested_g must be >= 1");
  if (reading_g < 0) throw ShapeError("label_rule: reading_g must be >= 0");
  return reading_g < requested_g ? Label::proceed : Label::stop;
}

std::string instruction_text(int requested_g, ObjectKind object) {
  return "load " + std::to_string(requested_g) + " g " + object_name(object) +
         " for me.";
}

std::string caption_text(int weight_g) {
  return "the scale reads " + std::to_string(weight_g) + " grams";
}

Instruction parse_instruction(const std::string& text) {
  static const char* kTemplate = "load {k} g {candy|garlic} for me.";
  std::string lowered(text);
  std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  std::istringstream in(lowered);
  std::string word;
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("instruction '" + text + "' does not match template '" +
                      kTemplate + "': " + why);
  };
  if (!(in >> word) || word != "load") throw fail("expected 'load'");
  std::string num;
  if (!(in >> num) || num.empty() ||
      !std::all_of(num.begin(), num.end(),
                   [](unsigned char c) { return std::isdigit(c); })) {
    throw fail("expected integer grams");
  }
  if (num.size() > 4) throw fail("grams value too large");
  int k = std::stoi(num);
  if (k < 1) throw fail("grams must be >= 1");
  if (!(in >> word) || word != "g") throw fail("expected 'g'");
  std::string obj_word;
  if (!(in >> obj_word)) throw fail("expected object word");
  ObjectKind object;
  if (obj_word == "candy") {
    object = ObjectKind::candy;
  } else if (obj_word == "garlic") {
    object = ObjectKind::garlic;
  } else {
    throw fail("unknown object '" + obj_word + "'");
  }
  if (!(in >> word) || word != "for") throw fail("expected 'for'");
  if (!(in >> word) || (word != "me." && word != "me"))
    throw fail("expected 'me.'");
  if (in >> word) throw fail("trailing text '" + word + "'");
  return {text, k, object};
}

ThresholdDataset build_threshold_dataset(const DatasetParams& params,
                                         uint64_t seed) {
  if (params.num_images < 1)
    throw ShapeError("build_threshold_dataset: num_images must be >= 1");
  if (params.max_k < 1)
    throw ShapeError("build_threshold_dataset: max_k must be >= 1");
  Rng rng(seed);
  ThresholdDataset ds;
  ds.images.reserve(params.num_images);
  for (int i = 0; i < params.num_images; ++i) {
    const bool far = params.far_fraction > 0.0 &&
                     rng.uniform() < params.far_fraction;
    const int cap = far ? 999 : params.weight_cap;
    const int w = rng.uniform_int(0, cap);
    ds.images.push_back(render_display(w, params.noise, rng.next_u64()));
  }
  ds.pairs.reserve(static_cast<size_t>(params.num_images) * params.max_k);
  for (int i = 0; i < params.num_images; ++i) {
    for (int k = 1; k <= params.max_k; ++k) {
      ObjectKind obj = ObjectKind::candy;
      if (params.objects == ObjectSet::garlic_only) {
        obj = ObjectKind::garlic;
      } else if (params.objects == ObjectSet::both) {
        obj = rng.uniform() < 0.5 ? ObjectKind::candy : ObjectKind::garlic;
      }
      ds.pairs.push_back(
          {i, k, obj, label_rule(k, ds.images[i].true_weight_g)});
    }
  }
  return ds;
}

CaptionDataset build_caption_dataset(int num_images, const NoiseParams& noise,
                                     uint64_t seed) {
  if (num_images < 1)
    throw ShapeError("build_caption_dataset: num_images must be >= 1");
  Rng rng(seed);
  CaptionDataset ds;
  ds.images.reserve(num_images);
  ds.captions.reserve(num_images);
  for (int i = 0; i < num_images; ++i) {
    const int w = rng.uniform_int(0, 999);
    ds.images.push_back(render_display(w, noise, rng.next_u64()));
    ds.captions.push_back(caption_text(w));
  }
  return ds;
}

namespace {

std::string encode_pixels(const ScaleImage& img) {
  std::vector<uint8_t> bytes(ScaleImage::kPixels);
  for (int i = 0; i < ScaleImage::kPixels; ++i) {
    bytes[i] = static_cast<uint8_t>(
        std::lround(std::clamp(img.pixels[i], 0.0, 1.0) * 255.0));
  }
  return base64_encode(bytes);
}

ScaleImage decode_pixels(const std::string& b64, int weight) {
  std::vector<uint8_t> bytes = base64_decode(b64);
  if (bytes.size() != ScaleImage::kPixels) {
    throw ParseError("dataset record: pixel payload has " +
                     std::to_string(bytes.size()) + " bytes, expected " +
                     std::to_string(ScaleImage::kPixels));
  }
  ScaleImage img;
  img.true_weight_g = weight;
  img.pixels.resize(ScaleImage::kPixels);
  for (int i = 0; i < ScaleImage::kPixels; ++i) {
    img.pixels[i] = bytes[i] / 255.0;
  }
  return img;
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  size_t start = 0;
  while (true) {
    size_t pos = line.find('\t', start);
    if (pos == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return fields;
}

}  // namespace

void write_threshold_dataset(const ThresholdDataset& ds, std::ostream& out) {
  std::vector<std::string> encoded(ds.images.size());
  for (size_t i = 0; i < ds.images.size(); ++i) {
    encoded[i] = encode_pixels(ds.images[i]);
  }
  for (const auto& p : ds.pairs) {
    out << encoded[p.image_idx] << '\t'
        << ds.images[p.image_idx].true_weight_g << '\t'
        << instruction_text(p.requested_g, p.object) << '\t'
        << label_name(p.label) << '\n';
  }
}

ThresholdDataset read_threshold_dataset(std::istream& in) {
  ThresholdDataset ds;
  std::string line;
  int lineno = 0;
  // identical consecutive payloads share one image slot
  std::string last_b64;
  int last_idx = -1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto fields = split_tabs(line);
    if (fields.size() != 4) {
      throw ParseError("dataset line " + std::to_string(lineno) +
                       ": expected 4 tab-separated fields");
    }
    const int weight = std::stoi(fields[1]);
    if (fields[0] != last_b64) {
      ds.images.push_back(decode_pixels(fields[0], weight));
      last_b64 = fields[0];
      last_idx = static_cast<int>(ds.images.size()) - 1;
    }
    Instruction ins = parse_instruction(fields[2]);
    ds.pairs.push_back({last_idx, ins.requested_g, ins.object,
                        label_from_name(fields[3])});
  }
  return ds;
}

void write_caption_dataset(const CaptionDataset& ds, std::ostream& out) {
  for (size_t i = 0; i < ds.images.size(); ++i) {
    out << encode_pixels(ds.images[i]) << '\t' << ds.images[i].true_weight_g
        << '\t' << ds.captions[i] << '\n';
  }
}

CaptionDataset read_caption_dataset(std::istream& in) {
  CaptionDataset ds;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto fields = split_tabs(line);
    if (fields.size() != 3) {
      throw ParseError("caption line " + std::to_string(lineno) +
                       ": expected 3 tab-separated fields");
    }
    ds.images.push_back(decode_pixels(fields[0], std::stoi(fields[1])));
    ds.captions.push_back(fields[2]);
  }
  return ds;
}

}  // namespace claw::display
