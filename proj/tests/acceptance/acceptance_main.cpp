#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "edgecli/commands.hpp"
#include "edgecli/pgm.hpp"
#include "sobelcs/adder.hpp"
#include "sobelcs/compressor.hpp"
#include "sobelcs/golden.hpp"
#include "sobelcs/patterns.hpp"
#include "sobelcs/pipeline.hpp"
#include "sobelcs/pixel_cache.hpp"
#include "sobelcs/resource_model.hpp"

namespace {

using namespace sobelcs;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string name(Variant v) { return std::string(to_string(v)); }

Outcome fail(std::string why) { return {false, std::move(why)}; }

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Outcome check_runtime(Outcome o, Clock::time_point t0, double limit) {
  const double s = seconds_since(t0);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3fs (limit %.0fs)", s, limit);
  if (!o.pass) return o;
  if (s >= limit) return fail(std::string("too slow: ") + buf);
  return {true, o.detail.empty() ? buf : o.detail + ", " + buf};
}

Outcome compressors_exhaustive() {
  const auto t0 = Clock::now();
  long long triples = 0;
  for (int w = 2; w <= 6; ++w) {
    const std::uint32_t n = 1u << w, mask = n - 1;
    for (std::uint32_t x = 0; x < n; ++x)
      for (std::uint32_t y = 0; y < n; ++y)
        for (std::uint32_t z = 0; z < n; ++z) {
          const auto bx = BitWord::from_unsigned(x, w);
          const auto by = BitWord::from_unsigned(y, w);
          const auto bz = BitWord::from_unsigned(z, w);
          const auto p = p2pp_compress(bx, by, bz);
          if (p.value_mod() != ((x + 2 * y + z) & mask) || p.carry.bit(0))
            return fail("p2pp w=" + std::to_string(w));
          const auto q = ppn_compress(bx, by, bz);
          if (q.value_mod() != ((x + y - z) & mask) || !q.carry.bit(0))
            return fail("ppn w=" + std::to_string(w));
          ++triples;
        }
  }
  return check_runtime({true, std::to_string(triples) + " triples"}, t0, 60);
}

Outcome adders_exhaustive() {
  const auto t0 = Clock::now();
  for (int cin = 0; cin < 2; ++cin)
    for (std::uint32_t a = 0; a < 256; ++a)
      for (std::uint32_t b = 0; b < 256; ++b) {
        const auto wa = BitWord::from_unsigned(a, 8), wb = BitWord::from_unsigned(b, 8);
        const auto r = ripple_add(wa, wb, cin != 0);
        const auto l = lookahead_add(wa, wb, cin != 0);
        if (!(r.sum == l.sum) || r.carry_out != l.carry_out)
          return fail("a=" + std::to_string(a) + " b=" + std::to_string(b));
      }
  return check_runtime({true, "131072 inputs"}, t0, 10);
}

Outcome oracle_equivalence() {
  const auto t0 = Clock::now();
  for (std::uint64_t f = 0; f < 100; ++f) {
    const Image img = patterns::random_image(64, 64, 2024, f);
    const EdgeImage expected = golden::sobel_golden(img);
    for (Variant v : kAllVariants) {
      if (!(process_frame(img, v) == expected))
        return fail("frame " + std::to_string(f) + " variant " + name(v));
    }
  }
  return check_runtime({true, "100 frames x 4 variants"}, t0, 30);
}

Outcome separability() {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> coef(-2, 2);
  const auto [sx, sy] = golden::sobel_kernels();
  for (std::uint64_t f = 0; f < 50; ++f) {
    const Image img = patterns::random_image(16, 16, 77, f);
    std::vector<std::pair<std::array<int, 3>, std::array<int, 3>>> pairs = {
        {{1, 2, 1}, {-1, 0, 1}}, {{-1, 0, 1}, {1, 2, 1}},
        {{coef(rng), coef(rng), coef(rng)}, {coef(rng), coef(rng), coef(rng)}}};
    for (const auto& [col, row] : pairs) {
      const auto direct = golden::convolve2d(img, golden::Kernel3x3::outer(col, row));
      if (!(golden::separable_convolve(img, col, row, golden::PassOrder::kColumnsFirst) == direct) ||
          !(golden::separable_convolve(img, col, row, golden::PassOrder::kRowsFirst) == direct))
        return fail("image " + std::to_string(f));
    }
    if (!(golden::convolve2d(img, sx) ==
          golden::separable_convolve(img, {1, 2, 1}, {-1, 0, 1})))
      return fail("sobel x image " + std::to_string(f));
  }
  return {true, "50 images, both orders"};
}

Outcome operation_count() {
  const auto n = golden::op_count(3);
  if (n != 17) return fail("op_count(3)=" + std::to_string(n));
  return {true, "op_count(3)=17"};
}

Outcome resource_quantitative() {
  resource::DesignParams p;
  std::ostringstream detail;
  int totals[4] = {};
  for (Variant v : kAllVariants) {
    p.variant = v;
    const auto r = resource::estimate_resources(p);
    const auto bits = r.dedicated_register_bits;
    if (bits < 8128 || bits > 8160) return fail(name(v) + " bits " + std::to_string(bits));
    if (v == Variant::kCompressor && bits != 8144) return fail("compressor bits " + std::to_string(bits));
    const double published = *resource::published_row(v).total_les;
    const double rel = (r.total_les - published) / published;
    if (rel < -0.15 || rel > 0.15)
      return fail(name(v) + " total " + std::to_string(r.total_les));
    totals[static_cast<int>(v)] = r.total_les;
    detail << name(v) << '=' << r.total_les << ' ';
  }
  const int tree = totals[static_cast<int>(Variant::kAdderTree)];
  const int sep = totals[static_cast<int>(Variant::kSeparated)];
  const int comp = totals[static_cast<int>(Variant::kCompressor)];
  const int la = totals[static_cast<int>(Variant::kLookaheadCompressor)];
  if (!(comp < tree && tree < la && la < sep)) return fail("ordering " + detail.str());
  return {true, detail.str() + "LEs"};
}

Outcome timing_ordering() {
  resource::DesignParams p;
  int lv[4] = {};
  for (Variant v : kAllVariants) {
    p.variant = v;
    lv[static_cast<int>(v)] = resource::critical_path_levels(p);
  }
  const int tree = lv[static_cast<int>(Variant::kAdderTree)];
  const int sep = lv[static_cast<int>(Variant::kSeparated)];
  const int comp = lv[static_cast<int>(Variant::kCompressor)];
  const int la = lv[static_cast<int>(Variant::kLookaheadCompressor)];
  const std::string d = std::to_string(tree) + " > " + std::to_string(sep) + " > " +
                        std::to_string(comp) + " > " + std::to_string(la) + " levels";
  if (!(tree > sep && sep > comp && comp > la)) return fail(d);
  return {true, d};
}

std::vector<StreamEvent> with_vblanks(const std::vector<StreamEvent>& in, std::mt19937& rng) {
  std::vector<StreamEvent> out;
  for (const auto& e : in) {
    if (rng() % 7 == 0) out.push_back(StreamEvent::vblank());
    out.push_back(e);
  }
  return out;
}

Outcome streaming() {
  std::mt19937 rng(5);
  for (std::uint64_t f = 0; f < 10; ++f) {
    const Image img = patterns::random_image(37, 23, 8, f);
    const auto plain_events = raster_events(img, false, true);
    const auto blank_events = with_vblanks(raster_events(img, true, true), rng);
    for (Variant v : kAllVariants) {
      const auto plain = process_stream(plain_events, img.width(), v);
      const auto blanked = process_stream(blank_events, img.width(), v);
      if (plain.size() != blanked.size()) return fail("sample count differs");
      for (std::size_t k = 0; k < plain.size(); ++k)
        if (plain[k].value != blanked[k].value || plain[k].row != blanked[k].row ||
            plain[k].col != blanked[k].col)
          return fail("blanked stream differs");
    }
  }

  for (int w : {3, 17, 512}) {
    PixelCache cache(w);
    const Image img = patterns::random_image(w, 4, 1);
    long long first = -1, index = 0;
    for (const auto& e : raster_events(img, false, false)) {
      if (cache.push(e) && first < 0) first = index;
      ++index;
    }
    if (first != 2LL * w + 2) return fail("first window at " + std::to_string(first));
  }

  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "sobelcs_acceptance";
  fs::create_directories(dir);
  edgecli::write_pgm(dir / "in.pgm", patterns::random_image(512, 512, 3));
  std::ostringstream out, err;
  const auto t0 = Clock::now();
  const int code = edgecli::run({"edgecli", "detect", "-i", (dir / "in.pgm").string(), "-o",
                                 (dir / "out.pgm").string()},
                                out, err);
  const double s = seconds_since(t0);
  if (code != 0) return fail("detect exit " + std::to_string(code) + ": " + err.str());
  char buf[96];
  std::snprintf(buf, sizeof buf, "blanking identical, first window 2W+2, 512x512 detect %.3fs", s);
  if (s >= 1.0) return fail(buf);
  return {true, buf};
}

Outcome horizon() {
  const int width = 320, height = 240, horizon_row = 131;
  patterns::HorizonParams hp;
  hp.horizon_row = horizon_row;
  hp.seed = 11;
  const Image img = patterns::horizon_image(width, height, hp);
  EdgeParams params;
  params.threshold = 128;
  const EdgeImage edges = process_frame(img, Variant::kLookaheadCompressor, params);
  long long white = 0, near = 0;
  for (int r = 0; r < height; ++r)
    for (int c = 0; c < width; ++c)
      if (edges.at(r, c) == 255) {
        ++white;
        if (r >= horizon_row - 2 && r <= horizon_row + 2) ++near;
      }
  if (white == 0) return fail("no edge pixels");
  const double frac = static_cast<double>(near) / static_cast<double>(white);
  char buf[80];
  std::snprintf(buf, sizeof buf, "%.2f%% of %lld white pixels near horizon", 100 * frac, white);
  if (frac < 0.90) return fail(buf);
  return {true, buf};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"compressor correctness (exhaustive, w=2..6)", compressors_exhaustive},
      {"lookahead == ripple (exhaustive, w=8)", adders_exhaustive},
      {"pipeline variants == golden Sobel (100 frames 64x64)", oracle_equivalence},
      {"separable convolution order independence", separability},
      {"3x3 convolution operation count", operation_count},
      {"resource model dedicated bits and LE totals", resource_quantitative},
      {"critical-path level ordering", timing_ordering},
      {"streaming semantics and detect runtime", streaming},
      {"horizon image edge localisation", horizon},
  };
  int failed = 0, n = 0;
  for (const auto& [name, fn] : criteria) {
    ++n;
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    std::printf("[%s] %d. %s: %s\n", o.pass ? "PASS" : "FAIL", n, name.c_str(), o.detail.c_str());
    if (!o.pass) ++failed;
  }
  std::printf("%d/%d criteria passed\n", n - failed, n);
  return failed == 0 ? 0 : 1;
}
