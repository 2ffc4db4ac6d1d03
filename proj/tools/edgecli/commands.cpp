#include "edgecli/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <sstream>

#include "edgecli/pgm.hpp"
#include "sobelcs/errors.hpp"
#include "sobelcs/golden.hpp"
#include "sobelcs/patterns.hpp"
#include "sobelcs/pipeline.hpp"
#include "sobelcs/resource_model.hpp"

namespace edgecli {

using sobelcs::Variant;

namespace {

sobelcs::EdgeParams edge_params(const CliConfig& c) {
  sobelcs::EdgeParams p;
  p.norm = c.norm;
  if (c.threshold) p.threshold = static_cast<std::uint8_t>(*c.threshold);
  return p;
}

// Loads the input and maps failures to exit codes. Returns nullopt after
// printing the error.
std::optional<sobelcs::Image> load(const std::string& path, std::ostream& err,
                                   int& code) {
  try {
    return read_pgm(std::filesystem::path(path));
  } catch (const IoError& e) {
    err << "edgecli: " << e.what() << '\n';
    code = kExitIo;
  } catch (const PgmFormatError& e) {
    err << "edgecli: " << e.what() << '\n';
    code = kExitBadInput;
  } catch (const sobelcs::ImageError& e) {
    err << "edgecli: " << e.what() << '\n';
    code = kExitBadInput;
  }
  return std::nullopt;
}

bool undersized(const sobelcs::Image& img, std::ostream& err) {
  if (img.width() >= 3 && img.height() >= 3) return false;
  err << "edgecli: image " << img.width() << "x" << img.height()
      << " is smaller than 3x3\n";
  return true;
}

}  // namespace

int cmd_detect(const CliConfig& config, std::ostream& out, std::ostream& err) {
  int code = kExitOk;
  const auto image = load(config.input, err, code);
  if (!image) return code;
  if (undersized(*image, err)) return kExitInvalidImage;

  const sobelcs::EdgeImage edges =
      sobelcs::process_frame(*image, config.variant, edge_params(config));
  try {
    write_pgm(std::filesystem::path(config.output), edges);
  } catch (const IoError& e) {
    err << "edgecli: " << e.what() << '\n';
    return kExitIo;
  }
  out << "wrote " << config.output << " (" << edges.width() << "x" << edges.height()
      << ", variant " << sobelcs::to_string(config.variant) << ")\n";
  return kExitOk;
}

namespace {

struct Mismatch {
  int frame;
  Variant variant;
  const char* quantity;
  int row;
  int col;
  std::int32_t expected;
  std::int32_t actual;
};

std::optional<Mismatch> first_mismatch(int frame, Variant v,
                                       const sobelcs::golden::GradientMaps& want,
                                       const sobelcs::EdgeImage& want_edges,
                                       const sobelcs::FrameResult& got) {
  for (int r = 1; r + 1 < want_edges.height(); ++r) {
    for (int c = 1; c + 1 < want_edges.width(); ++c) {
      if (got.gx.at(r, c) != want.gx.at(r, c))
        return Mismatch{frame, v, "gx", r, c, want.gx.at(r, c), got.gx.at(r, c)};
      if (got.gy.at(r, c) != want.gy.at(r, c))
        return Mismatch{frame, v, "gy", r, c, want.gy.at(r, c), got.gy.at(r, c)};
      if (got.edges.at(r, c) != want_edges.at(r, c))
        return Mismatch{frame, v, "edge", r, c, want_edges.at(r, c), got.edges.at(r, c)};
    }
  }
  return std::nullopt;
}

}  // namespace

int cmd_verify(const CliConfig& config, std::ostream& out, std::ostream& err) {
  if (config.width < 3 || config.height < 3 || config.frames < 0) {
    err << "edgecli: verify needs width, height >= 3 and frames >= 0\n";
    return kExitBadInput;
  }
  const sobelcs::EdgeParams params = edge_params(config);
  const auto interior =
      static_cast<std::uint64_t>(config.width - 2) * static_cast<std::uint64_t>(config.height - 2);
  std::uint64_t comparisons = 0;

  for (int f = 0; f < config.frames; ++f) {
    const sobelcs::Image img = sobelcs::patterns::random_image(
        config.width, config.height, config.seed, static_cast<std::uint64_t>(f));
    const auto want = sobelcs::golden::sobel_gradients(img);
    const auto want_edges = sobelcs::golden::sobel_golden(img, params);

    for (Variant v : sobelcs::kAllVariants) {
      sobelcs::FrameOptions opts;
      if (config.inject_fault && f == 0 && v == config.variant) {
        opts.fault = sobelcs::FaultInjection{*config.inject_fault, config.fault_bit};
      }
      const auto got = sobelcs::process_frame_detailed(img, v, params, opts);
      if (const auto m = first_mismatch(f, v, want, want_edges, got)) {
        out << "MISMATCH frame=" << m->frame << " variant=" << sobelcs::to_string(m->variant)
            << " quantity=" << m->quantity << " row=" << m->row << " col=" << m->col
            << " expected=" << m->expected << " actual=" << m->actual << '\n';
        return kExitMismatch;
      }
      comparisons += interior;
    }
  }
  out << "verified " << config.frames << " frame(s) of " << config.width << "x"
      << config.height << " (seed " << config.seed << "), " << comparisons
      << " comparisons, all variants bit-exact\n";
  return kExitOk;
}

int cmd_report(const CliConfig& config, std::ostream& out, std::ostream& err) {
  std::vector<sobelcs::resource::ResourceReport> reports;
  try {
    const std::vector<Variant> variants =
        config.all_variants
            ? std::vector<Variant>(sobelcs::kAllVariants.begin(), sobelcs::kAllVariants.end())
            : std::vector<Variant>{config.variant};
    for (Variant v : variants) {
      sobelcs::resource::DesignParams p;
      p.width = config.width;
      p.height = config.height;
      p.bits_per_pixel = config.bits_per_pixel;
      p.datapath_width = config.datapath_width;
      p.variant = v;
      reports.push_back(sobelcs::resource::estimate_resources(p));
    }
  } catch (const sobelcs::ContractError& e) {
    err << "edgecli: " << e.what() << '\n';
    return kExitBadInput;
  }
  std::stable_sort(reports.begin(), reports.end(), [](const auto& a, const auto& b) {
    return a.total_les < b.total_les;
  });

  if (config.format == ReportFormat::kKeyValue) {
    out << "design.width=" << config.width << "\ndesign.height=" << config.height
        << "\ndesign.bits_per_pixel=" << config.bits_per_pixel
        << "\ndesign.datapath_width=" << config.datapath_width << '\n';
    sobelcs::resource::render_key_values(out, reports);
  } else {
    out << "Modeled resources for " << config.width << "x" << config.height << ", "
        << config.bits_per_pixel << "-bit pixels, " << config.datapath_width
        << "-bit datapath\n\n";
    sobelcs::resource::render_text(out, reports);
    out << "\nPublished reference rows\n";
    sobelcs::resource::render_published_table(out);
  }
  return kExitOk;
}

namespace {

std::string pair_text(const std::optional<sobelcs::CsPair>& p) {
  if (!p) return "-";
  return "sum=" + p->sum.to_binary() + " carry=" + p->carry.to_binary();
}

std::string word_text(const std::optional<sobelcs::BitWord>& w) {
  if (!w) return "-";
  std::ostringstream s;
  s << w->to_binary() << " (" << w->value() << ")";
  return s.str();
}

void print_chain(std::ostream& out, const std::array<sobelcs::BitWord, 2>& chain,
                 int depth) {
  out << "[" << chain[0].to_binary() << " " << chain[1].to_binary() << "] depth="
      << depth;
}

}  // namespace

int cmd_trace(const CliConfig& config, std::ostream& out, std::ostream& err) {
  int code = kExitOk;
  const auto image = load(config.input, err, code);
  if (!image) return code;
  if (image->width() > kMaxTraceSide || image->height() > kMaxTraceSide) {
    err << "edgecli: trace is limited to " << kMaxTraceSide << "x" << kMaxTraceSide
        << " images, got " << image->width() << "x" << image->height() << '\n';
    return kExitBadInput;
  }
  if (undersized(*image, err)) return kExitInvalidImage;

  out << "trace " << image->width() << "x" << image->height() << " variant "
      << sobelcs::to_string(config.variant) << '\n';
  sobelcs::SobelPipeline pipe(image->width(), config.variant, edge_params(config));
  pipe.set_trace_sink([&out](const sobelcs::CycleTrace& t) {
    out << "cycle " << t.cycle << " pixel(" << t.row << "," << t.col
        << ")=" << static_cast<int>(t.pixel)
        << " column=" << (t.column_valid ? "valid" : "invalid")
        << " window=" << (t.window_valid ? "valid" : "invalid") << '\n';
    if (!t.column_valid) return;
    out << "  window";
    for (int r = 0; r < 3; ++r) {
      out << (r ? " |" : "");
      for (int c = 0; c < 3; ++c) out << ' ' << static_cast<int>(t.registers.at(r, c));
    }
    out << '\n';
    out << "  gx.p2pp " << pair_text(t.gx.first_layer) << '\n';
    out << "  gx.u    " << word_text(t.gx.cached) << '\n';
    out << "  gx.ppn  " << pair_text(t.gx.second_layer) << '\n';
    out << "  gx      " << word_text(t.gx.gradient) << '\n';
    out << "  gy.v    " << word_text(t.gy.cached) << '\n';
    out << "  gy.p2pp " << pair_text(t.gy.first_layer) << '\n';
    out << "  gy      " << word_text(t.gy.gradient) << '\n';
    out << "  colsum  ";
    print_chain(out, t.caches.colsum, t.caches.colsum_depth);
    out << "\n  coldiff ";
    print_chain(out, t.caches.coldiff, t.caches.coldiff_depth);
    out << '\n';
    if (t.sample) {
      out << "  sample (" << t.sample->row << "," << t.sample->col << ") gx="
          << t.sample->gradient.gx << " gy=" << t.sample->gradient.gy
          << " value=" << static_cast<int>(t.sample->value) << '\n';
    }
  });
  for (int r = 0; r < image->height(); ++r)
    for (int c = 0; c < image->width(); ++c)
      pipe.push(sobelcs::StreamEvent::pixel(image->at(r, c)));
  pipe.push(sobelcs::StreamEvent::end_of_frame());
  out << "cycles " << pipe.cycles() << " samples " << pipe.samples_emitted() << '\n';
  return kExitOk;
}

namespace {

Variant parse_variant_or_throw(const std::string& text) {
  if (const auto v = sobelcs::parse_variant(text)) return *v;
  throw CLI::ValidationError("--variant",
                             "unknown variant '" + text +
                                 "' (adder-tree, separated, compressor, lookahead-compressor)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bit-accurate compressor Sobel edge detector and FPGA cost model", "edgecli"};
  app.require_subcommand(1);

  CliConfig cfg;
  std::string variant_text(sobelcs::to_string(cfg.variant));
  std::string norm_text = "l2";
  std::string format_text = "text";

  auto add_variant = [&](CLI::App* sub) {
    sub->add_option("--variant", variant_text,
                    "adder-tree | separated | compressor | lookahead-compressor")
        ->capture_default_str();
  };
  auto add_edge = [&](CLI::App* sub) {
    sub->add_option("--threshold", cfg.threshold, "binary output: 255 where magnitude >= T")
        ->check(CLI::Range(0, 255));
    sub->add_option("--norm", norm_text, "l2 | l1")->capture_default_str();
  };

  CLI::App* detect = app.add_subcommand("detect", "run edge detection on a P5 PGM");
  detect->add_option("-i,--input", cfg.input, "input PGM")->required();
  detect->add_option("-o,--output", cfg.output, "output PGM")->required();
  add_variant(detect);
  add_edge(detect);

  CLI::App* verify = app.add_subcommand("verify", "cross-check all variants against the golden convolution");
  verify->add_option("--width", cfg.width)->capture_default_str();
  verify->add_option("--height", cfg.height)->capture_default_str();
  verify->add_option("--frames", cfg.frames)->capture_default_str();
  verify->add_option("--seed", cfg.seed)->capture_default_str();
  verify->add_option("--inject-fault", cfg.inject_fault,
                     "flip a Gx compressor sum bit on this sample of frame 0 (test hook)")
      ->group("Testing");
  verify->add_option("--fault-bit", cfg.fault_bit)->check(CLI::Range(0, 10))->group("Testing");
  add_variant(verify);
  add_edge(verify);

  CLI::App* report = app.add_subcommand("report", "modeled FPGA resources and critical path");
  int report_width = 512;
  int report_height = 512;
  report->add_option("--width", report_width, "image width")->capture_default_str();
  report->add_option("--height", report_height, "image height")->capture_default_str();
  report->add_option("--bpp", cfg.bits_per_pixel)->capture_default_str();
  report->add_option("--datapath-width", cfg.datapath_width)->capture_default_str();
  report->add_flag("--all", cfg.all_variants, "report every variant");
  report->add_option("--format", format_text, "text | kv")->capture_default_str();
  add_variant(report);

  CLI::App* trace = app.add_subcommand("trace", "per-cycle bit-level dump for a tiny PGM");
  trace->add_option("-i,--input", cfg.input, "input PGM (at most 16x16)")->required();
  add_variant(trace);
  add_edge(trace);

  std::vector<std::string> argv_rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(argv_rev);
    cfg.variant = parse_variant_or_throw(variant_text);
    const auto norm = sobelcs::parse_norm(norm_text);
    if (!norm) throw CLI::ValidationError("--norm", "expected l2 or l1");
    cfg.norm = *norm;
    if (format_text == "kv") {
      cfg.format = ReportFormat::kKeyValue;
    } else if (format_text != "text") {
      throw CLI::ValidationError("--format", "expected text or kv");
    }
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "edgecli: " << e.what() << '\n';
    return kExitBadInput;
  }

  if (*detect) return cmd_detect(cfg, out, err);
  if (*verify) return cmd_verify(cfg, out, err);
  if (*report) {
    cfg.width = report_width;
    cfg.height = report_height;
    return cmd_report(cfg, out, err);
  }
  return cmd_trace(cfg, out, err);
}

}  // namespace edgecli
