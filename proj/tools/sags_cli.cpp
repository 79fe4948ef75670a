// Command-line front end: build scroll codes, encode/decode words, measure
// distances, run channel simulations, and analyze error vectors as bundle
// extensions. One binary, scriptable subcommands, all randomness seeded.

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "sags/sags.hpp"

namespace {

using namespace sags;

struct SourceFlags {
  std::string spec_file;
  std::string field;
  std::string exponents;
  std::string points;
  std::string bases = "identity";
  uint64_t seed = 0;
};

void add_source_flags(CLI::App* cmd, SourceFlags& src) {
  cmd->add_option("--spec", src.spec_file, "code-spec file to load");
  cmd->add_option("--field", src.field, "field descriptor, e.g. 5 or 2^2/1,1,1");
  cmd->add_option("--exponents", src.exponents, "scroll exponents, e.g. 2,1");
  cmd->add_option("--points", src.points, "fiber points as element indices, e.g. 0,1,2,3,4");
  cmd->add_option("--bases", src.bases, "fiber basis mode: identity or random");
  cmd->add_option("--seed", src.seed, "seed for random fiber bases and channel randomness");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

CodeSpec spec_from_flags(const SourceFlags& src) {
  if (!src.spec_file.empty()) return parse_code_spec(read_file(src.spec_file));
  if (src.field.empty() || src.exponents.empty() || src.points.empty())
    throw std::runtime_error("need --spec or all of --field/--exponents/--points");
  Field f = Field::parse(src.field);
  CodeSpec spec{f, {}, {}, CodeSpec::Bases::identity, src.seed, {}};
  {
    std::istringstream es(src.exponents);
    std::string tok;
    while (std::getline(es, tok, ',')) spec.exponents.push_back(std::stoi(tok));
  }
  spec.points = word_from_text(f, src.points);
  if (src.bases == "identity")
    spec.bases = CodeSpec::Bases::identity;
  else if (src.bases == "random")
    spec.bases = CodeSpec::Bases::random;
  else
    throw std::runtime_error("--bases must be identity or random");
  return spec;
}

std::string format_location(const FiberLocation& loc) {
  std::ostringstream os;
  os << '{';
  for (size_t i = 0; i < loc.size(); ++i) {
    if (i) os << ',';
    os << loc[i];
  }
  os << '}';
  return os.str();
}

std::string format_rate(double r) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << r;
  return os.str();
}

int cmd_build(const SourceFlags& src, const std::string& out_prefix) {
  CodeSpec spec = spec_from_flags(src);
  SagsCode code = build_from_spec(spec);
  std::cout << "n=" << code.n << " k=" << code.k << " radius=" << fiber_correction_radius(code)
            << " guarantee=" << code.designed_guarantee
            << " sags_inequality=" << (code.sags_inequality ? "holds" : "violated") << '\n';
  if (!out_prefix.empty()) {
    write_file(out_prefix + ".spec", serialize_code_spec(spec));
    write_file(out_prefix + ".G.txt", matrix_to_text(code.G));
    write_file(out_prefix + ".R.txt", matrix_to_text(code.R));
    std::cout << "wrote " << out_prefix << ".spec, " << out_prefix << ".G.txt, " << out_prefix
              << ".R.txt\n";
  }
  return 0;
}

int cmd_encode(const SourceFlags& src, const std::string& word) {
  CodeSpec spec = spec_from_flags(src);
  SagsCode code = build_from_spec(spec);
  std::vector<Fel> msg = word_from_text(spec.field, word);
  std::cout << word_to_text(spec.field, encode(code, msg)) << '\n';
  return 0;
}

int cmd_decode(const SourceFlags& src, const std::string& word, int radius_override) {
  CodeSpec spec = spec_from_flags(src);
  SagsCode code = build_from_spec(spec);
  std::vector<Fel> received = word_from_text(spec.field, word);
  std::optional<size_t> a_max;
  if (radius_override >= 0) a_max = static_cast<size_t>(radius_override);
  DecodeResult res = decode(code, received, a_max);
  switch (res.status) {
    case DecodeStatus::corrected:
      std::cout << "status=corrected fibers=" << format_location(res.locations.front())
                << " weight=" << hamming_weight(res.error)
                << " corrected=" << word_to_text(spec.field, res.corrected) << '\n';
      break;
    case DecodeStatus::ambiguous: {
      std::cout << "status=ambiguous locations=";
      for (size_t i = 0; i < res.locations.size(); ++i) {
        if (i) std::cout << ';';
        std::cout << format_location(res.locations[i]);
      }
      std::cout << '\n';
      break;
    }
    case DecodeStatus::undecodable:
      std::cout << "status=undecodable\n";
      break;
  }
  return 0;
}

int cmd_mindist(const SourceFlags& src, size_t hierarchy, uint64_t guard) {
  CodeSpec spec = spec_from_flags(src);
  SagsCode code = build_from_spec(spec);
  const int d = min_distance_bruteforce(code, guard);
  std::cout << "d=" << d;
  if (hierarchy > 0) {
    auto h = weight_hierarchy_bruteforce(code, hierarchy, guard);
    std::cout << " hierarchy=";
    for (size_t i = 0; i < h.size(); ++i) {
      if (i) std::cout << ',';
      std::cout << h[i];
    }
  }
  std::cout << '\n';
  return 0;
}

int cmd_simulate(const SourceFlags& src, uint64_t trials, size_t fibers, size_t per_fiber,
                 const std::string& log_path) {
  CodeSpec spec = spec_from_flags(src);
  SagsCode code = build_from_spec(spec);
  ChannelModel model{fibers, per_fiber, src.seed};
  ChannelStats stats;
  if (log_path.empty()) {
    stats = simulate_channel(code, trials, model);
  } else {
    std::ofstream log(log_path, std::ios::binary);
    if (!log) throw std::runtime_error("cannot write " + log_path);
    stats = simulate_channel(code, trials, model, &log);
  }
  std::cout << "trials=" << stats.trials << " success=" << format_rate(stats.success_rate())
            << " ambiguous=" << format_rate(stats.ambiguity_rate())
            << " undecodable=" << format_rate(double(stats.undecodable) / double(stats.trials))
            << " miscorrected=" << format_rate(double(stats.miscorrected) / double(stats.trials))
            << " mean_span_tests=" << format_rate(stats.mean_span_tests()) << '\n';
  return 0;
}

int cmd_analyze(const SourceFlags& src, const std::string& word, const std::string& words_file) {
  CodeSpec spec = spec_from_flags(src);
  SagsCode code = build_from_spec(spec);
  std::vector<std::vector<Fel>> errors;
  if (!word.empty()) errors.push_back(word_from_text(spec.field, word));
  if (!words_file.empty()) {
    std::istringstream in(read_file(words_file));
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      errors.push_back(word_from_text(spec.field, line));
    }
  }
  if (errors.empty()) throw std::runtime_error("need --word or --words-file");
  for (const auto& e : errors) {
    S1Report rep = check_instability(code, e);
    std::cout << "weight=" << hamming_weight(e) << " a=" << rep.fiber_count
              << " type=" << rep.type.to_string() << " s1=" << rep.s1 << " bound=" << rep.bound
              << " satisfied=" << (rep.satisfied ? "yes" : "no") << '\n';
  }
  return 0;
}

int cmd_selftest() {
  int failures = 0;
  auto report = [&](const char* name, bool ok) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << '\n';
    if (!ok) ++failures;
  };

  Field f5(5, 1, {0, 1});
  std::vector<Fel> pts{Fel{0}, Fel{1}, Fel{2}, Fel{3}, Fel{4}};

  // quadric [10,4] code
  ScrollSpec quad(f5, {1, 1});
  SagsCode code = build_code(quad, standard_fiber_bases(quad, pts, BasisMode::identity));
  {
    Matrix prod = mat_mul(code.R, transpose(code.G));
    bool ok = true;
    for (size_t i = 0; i < prod.rows(); ++i)
      for (size_t j = 0; j < prod.cols(); ++j)
        if (prod.at(i, j) != f5.zero()) ok = false;
    report("parity annihilates generator", ok && rank_of(code.G) == 4 && rank_of(code.R) == 6);
  }
  report("quadric minimum distance 4", min_distance_bruteforce(code) == 4);
  {
    bool ok = true;
    std::vector<Fel> sent = encode(code, {Fel{1}, Fel{2}, Fel{3}, Fel{4}});
    for (size_t fiber = 0; fiber < 5 && ok; ++fiber)
      for (uint32_t v1 = 0; v1 < 5 && ok; ++v1)
        for (uint32_t v2 = 0; v2 < 5; ++v2) {
          if (v1 == 0 && v2 == 0) continue;
          std::vector<Fel> rec = sent;
          rec[fiber * 2] = f5.add(rec[fiber * 2], Fel{v1});
          rec[fiber * 2 + 1] = f5.add(rec[fiber * 2 + 1], Fel{v2});
          DecodeResult res = decode(code, rec);
          if (res.status != DecodeStatus::corrected || res.corrected != sent) {
            ok = false;
            break;
          }
        }
    report("single-fiber errors decode exactly", ok);
  }
  {
    PrincipalPart zero;
    zero.coeff.assign(5, {f5.zero(), f5.zero()});
    report("zero syndrome splits as (0,-4,-4)",
           splitting_type(code, zero).degrees == std::vector<int>{0, -4, -4});
    std::vector<Fel> e(code.n, f5.zero());
    e[0] = Fel{2};
    S1Report rep = check_instability(code, e);
    report("single-fiber extension is unstable with s1=-5",
           rep.s1 == -5 && rep.bound == -5 && rep.satisfied);
  }
  {
    ScrollSpec line(f5, {2});
    SagsCode rs = build_code(line, standard_fiber_bases(line, pts, BasisMode::identity));
    report("degree-2 code over GF(5) is a [5,3,3] code",
           rs.n == 5 && rs.k == 3 && min_distance_bruteforce(rs) == 3);
    report("dual code check", dual_code_check(rs).ok && dual_code_check(code).ok);
  }
  report("rational point count (q=2, r=2)",
         count_rational_points(ScrollSpec(Field(2, 1, {0, 1}), {1, 1})) == 9);
  std::cout << (failures == 0 ? "selftest passed\n" : "selftest FAILED\n");
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"scroll code toolkit: exact construction, decoding and extension analysis"};
  app.require_subcommand(1);

  SourceFlags src;
  std::string out_prefix, word, words_file, log_path;
  size_t hierarchy = 0, fibers = 1, per_fiber = 1;
  uint64_t trials = 1000, guard = 10000000;
  int radius_override = -1;

  CLI::App* build = app.add_subcommand("build", "construct a code; print parameters, write matrices");
  add_source_flags(build, src);
  build->add_option("--out", out_prefix, "output file prefix for .spec/.G.txt/.R.txt");

  CLI::App* enc = app.add_subcommand("encode", "encode a length-k message word");
  add_source_flags(enc, src);
  enc->add_option("--word", word, "message word, comma-separated element indices")->required();

  CLI::App* dec = app.add_subcommand("decode", "decode a received length-n word");
  add_source_flags(dec, src);
  dec->add_option("--word", word, "received word")->required();
  dec->add_option("--radius-override", radius_override, "search fiber subsets up to this size");

  CLI::App* mindist = app.add_subcommand("mindist", "brute-force minimum distance");
  add_source_flags(mindist, src);
  mindist->add_option("--hierarchy", hierarchy, "also print weight hierarchy d_1..d_i");
  mindist->add_option("--guard", guard, "message-space enumeration guard");

  CLI::App* sim = app.add_subcommand("simulate", "random-error channel simulation");
  add_source_flags(sim, src);
  sim->add_option("--trials", trials, "number of trials");
  sim->add_option("--fibers", fibers, "error-carrying fibers per trial");
  sim->add_option("--per-fiber", per_fiber, "error values per chosen fiber");
  sim->add_option("--log", log_path, "write a per-trial log file");

  CLI::App* analyze = app.add_subcommand("analyze", "splitting type and s1 report per error vector");
  add_source_flags(analyze, src);
  analyze->add_option("--word", word, "error vector");
  analyze->add_option("--words-file", words_file, "file with one error vector per line");

  CLI::App* selftest = app.add_subcommand("selftest", "run the built-in fast checks");

  CLI11_PARSE(app, argc, argv);

  try {
    if (build->parsed()) return cmd_build(src, out_prefix);
    if (enc->parsed()) return cmd_encode(src, word);
    if (dec->parsed()) return cmd_decode(src, word, radius_override);
    if (mindist->parsed()) return cmd_mindist(src, hierarchy, guard);
    if (sim->parsed()) return cmd_simulate(src, trials, fibers, per_fiber, log_path);
    if (analyze->parsed()) return cmd_analyze(src, word, words_file);
    if (selftest->parsed()) return cmd_selftest();
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 1;
  }
  return 0;
}
