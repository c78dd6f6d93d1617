// Copyright 2026 The portraitmap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// portrait: command-line front end over the portraitmap C API.
//
// Exit codes: 0 satisfied / success, 1 inequality violated, 2 input error,
// 3 oracle disagreement (--verify-oracle).

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include "cli_handles.hpp"
#include "portrait/portrait.h"

namespace portrait_cli {
namespace {

using nlohmann::ordered_json;

constexpr double kDefaultOracleTolerance = 1e-8;

// Largest accepted core/oracle disagreement; set once from --oracle-tol.
double oracle_tolerance = kDefaultOracleTolerance;
constexpr const char* kSeedVariable = "PORTRAIT_SEED";

class OracleMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---- helpers ---------------------------------------------------------------

std::string read_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw InputError("sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 0xf]);
  }
  return out;
}

struct Input {
  Matrix matrix;
  std::string digest;
};

Input load_input(const std::string& path) {
  const std::string bytes = read_bytes(path);
  Matrix m = make_matrix([&](pm_matrix** out) { return pm_matrix_parse_json(bytes.c_str(), out); },
                         "reading " + path);
  return {std::move(m), sha256_hex(bytes)};
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write " + out_path);
  out << text;
}

std::string matrix_json(const pm_matrix* m) {
  char* raw = nullptr;
  check(pm_matrix_to_json(m, &raw), "serialize");
  std::string text(raw);
  pm_string_free(raw);
  return text;
}

std::string short_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::uint64_t default_seed() {
  const char* env = std::getenv(kSeedVariable);
  if (env == nullptr || *env == '\0') return 0;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw InputError(std::string(kSeedVariable) + " is not an unsigned integer");
  }
}

std::vector<std::pair<std::size_t, std::size_t>> factorizations(std::size_t dim) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t n = 2; n * 2 <= dim; ++n)
    if (dim % n == 0) out.emplace_back(n, dim / n);
  return out;
}

double min_eigenvalue(const pm_matrix* m) {
  double v = 0.0;
  check(pm_min_eigenvalue(m, &v), "min eigenvalue");
  return v;
}

double oracle_entropy(const pm_matrix* m) {
  double v = 0.0;
  check(pm_oracle_entropy(m, &v), "oracle entropy");
  return v;
}

double xlogx(double t) { return t == 0.0 ? 0.0 : t * std::log(t); }

// ---- inequality checks -----------------------------------------------------

enum class Kind { Subadditivity, Scaled, Shifted, StrongSubadditivity };

const std::map<std::string, Kind> kKinds{{"subadd", Kind::Subadditivity},
                                         {"scaled", Kind::Scaled},
                                         {"shifted", Kind::Shifted},
                                         {"ssa", Kind::StrongSubadditivity}};

struct CheckSpec {
  Kind kind = Kind::Subadditivity;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t pad_to = 0;  // 0: no embedding
  std::size_t offset = 0;
  std::optional<double> x;
  std::array<std::size_t, 3> radices{0, 0, 0};
  double tol = 1e-9;
};

using Terms = std::vector<std::pair<std::string, double>>;

Terms report_terms(const pm_report* r) {
  Terms out;
  for (std::size_t i = 0; i < pm_report_term_count(r); ++i) {
    const char* label = nullptr;
    double value = 0.0;
    check(pm_report_term(r, i, &label, &value), "report term");
    out.emplace_back(label, value);
  }
  return out;
}

/// Resolves the default shift: the smallest x >= 0 making the embedded matrix PSD.
double resolve_shift(const pm_matrix* a, const CheckSpec& spec) {
  if (spec.x) return *spec.x;
  const Matrix padded = make_matrix(
      [&](pm_matrix** out) { return pm_embed(a, spec.pad_to, spec.offset, out); }, "embed");
  return std::max(0.0, -min_eigenvalue(padded.get()));
}

Report run_check(const pm_matrix* a, const CheckSpec& spec) {
  switch (spec.kind) {
    case Kind::Subadditivity:
      if (spec.pad_to != 0)
        return make_report(
            [&](pm_report** out) {
              return pm_check_padded_subadditivity(a, spec.pad_to, spec.offset, spec.n, spec.m,
                                                   spec.tol, out);
            },
            "subadditivity check");
      return make_report(
          [&](pm_report** out) { return pm_check_subadditivity(a, spec.n, spec.m, spec.tol, out); },
          "subadditivity check");
    case Kind::Scaled:
      return make_report(
          [&](pm_report** out) { return pm_check_scaled(a, spec.n, spec.m, spec.tol, out); },
          "scaled check");
    case Kind::Shifted: {
      const double x = resolve_shift(a, spec);
      return make_report(
          [&](pm_report** out) {
            return pm_check_shifted(a, spec.pad_to, spec.offset, spec.n, spec.m, x, spec.tol, out);
          },
          "shifted check");
    }
    case Kind::StrongSubadditivity:
      return make_report(
          [&](pm_report** out) {
            return pm_check_ssa(a, spec.radices[0], spec.radices[1], spec.radices[2], spec.tol,
                                out);
          },
          "ssa check");
  }
  throw InputError("unknown kind");
}

std::pair<double, double> oracle_portrait_entropies(const pm_matrix* a, std::size_t n,
                                                    std::size_t m) {
  pm_matrix* a1 = nullptr;
  pm_matrix* a2 = nullptr;
  check(pm_oracle_portrait(a, n, m, &a1, &a2), "oracle portrait");
  const Matrix h1(a1), h2(a2);
  return {oracle_entropy(h1.get()), oracle_entropy(h2.get())};
}

double oracle_chain_entropy(const pm_matrix* a, const std::array<std::size_t, 3>& radices,
                            std::vector<std::size_t> keep) {
  const Matrix reduced = make_matrix(
      [&](pm_matrix** out) {
        return pm_oracle_chain_portrait(a, radices.data(), radices.size(), keep.data(),
                                        keep.size(), out);
      },
      "oracle chain portrait");
  return oracle_entropy(reduced.get());
}

/// Recomputes every term of `report` through the brute-force oracle and
/// returns the largest absolute disagreement (terms, lhs and rhs).
double oracle_discrepancy(const pm_matrix* a, const CheckSpec& spec, const pm_report* report) {
  std::map<std::string, double> terms;
  double lhs = 0.0, rhs = 0.0;
  switch (spec.kind) {
    case Kind::Subadditivity: {
      terms["S_joint"] = oracle_entropy(a);
      const pm_matrix* source = a;
      Matrix padded;
      if (spec.pad_to != 0) {
        padded = make_matrix(
            [&](pm_matrix** out) {
              return pm_oracle_embed_shift(a, spec.pad_to, spec.offset, 0.0, out);
            },
            "oracle embed");
        source = padded.get();
        terms["S_joint_embedded"] = oracle_entropy(source);
      }
      std::tie(terms["S_part1"], terms["S_part2"]) =
          oracle_portrait_entropies(source, spec.n, spec.m);
      lhs = terms["S_joint"];
      rhs = terms["S_part1"] + terms["S_part2"];
      break;
    }
    case Kind::Scaled: {
      terms["S_joint"] = oracle_entropy(a);
      std::tie(terms["S_part1"], terms["S_part2"]) = oracle_portrait_entropies(a, spec.n, spec.m);
      const std::vector<double> data = raw_data(a);
      const std::size_t dim = pm_matrix_rows(a);
      double mu = 0.0;
      for (std::size_t i = 0; i < dim; ++i) mu += data[2 * (i * dim + i)];
      terms["mu"] = mu;
      terms["mu_ln_mu"] = xlogx(mu);
      lhs = terms["S_joint"];
      rhs = terms["S_part1"] + terms["S_part2"] + terms["mu_ln_mu"];
      break;
    }
    case Kind::Shifted: {
      const double x = resolve_shift(a, spec);
      const Matrix shifted = make_matrix(
          [&](pm_matrix** out) {
            return pm_oracle_embed_shift(a, spec.pad_to, spec.offset, x, out);
          },
          "oracle embed/shift");
      terms["S_shifted"] = oracle_entropy(shifted.get());
      std::tie(terms["S_part1"], terms["S_part2"]) =
          oracle_portrait_entropies(shifted.get(), spec.n, spec.m);
      const std::vector<double> data = raw_data(shifted.get());
      const std::size_t dim = pm_matrix_rows(shifted.get());
      double tr = 0.0;
      for (std::size_t i = 0; i < dim; ++i) tr += data[2 * (i * dim + i)];
      terms["trace_shifted"] = tr;
      terms["trace_ln_trace"] = xlogx(tr);
      terms["lhs_regrouped"] = terms["S_shifted"] - terms["trace_ln_trace"];
      terms["rhs_regrouped"] = terms["S_part1"] + terms["S_part2"];
      lhs = terms["S_shifted"];
      rhs = terms["rhs_regrouped"] + terms["trace_ln_trace"];
      break;
    }
    case Kind::StrongSubadditivity:
      terms["S_123"] = oracle_entropy(a);
      terms["S_2"] = oracle_chain_entropy(a, spec.radices, {1});
      terms["S_12"] = oracle_chain_entropy(a, spec.radices, {0, 1});
      terms["S_23"] = oracle_chain_entropy(a, spec.radices, {1, 2});
      lhs = terms["S_123"] + terms["S_2"];
      rhs = terms["S_12"] + terms["S_23"];
      break;
  }
  double worst = std::max(std::abs(lhs - pm_report_lhs(report)),
                          std::abs(rhs - pm_report_rhs(report)));
  for (const auto& [label, value] : report_terms(report)) {
    const auto it = terms.find(label);
    if (it == terms.end()) return std::numeric_limits<double>::infinity();
    worst = std::max(worst, std::abs(it->second - value));
  }
  return worst;
}

bool is_entropic(const std::string& label) { return label != "mu" && label != "trace_shifted"; }

ordered_json report_json(const pm_report* r, bool bits) {
  const double unit = bits ? std::numbers::ln2 : 1.0;
  ordered_json j;
  j["inequality"] = pm_report_name(r);
  j["unit"] = bits ? "bits" : "nats";
  const double lhs = pm_report_lhs(r) / unit;
  const double rhs = pm_report_rhs(r) / unit;
  j["lhs"] = lhs;
  j["rhs"] = rhs;
  j["slack"] = bits ? rhs - lhs : pm_report_slack(r);
  j["tolerance"] = pm_report_tolerance(r) / unit;
  j["satisfied"] = pm_report_satisfied(r) != 0;
  ordered_json terms = ordered_json::object();
  for (const auto& [label, value] : report_terms(r))
    terms[label] = is_entropic(label) ? value / unit : value;
  j["terms"] = terms;
  return j;
}

// ---- commands --------------------------------------------------------------

struct PortraitArgs {
  std::string input;
  std::size_t n = 0, m = 0, pad_to = 0, offset = 0;
  bool has_pad = false, has_offset = false;
  std::string out;
  bool verify = false;
};

int cmd_portrait(const PortraitArgs& args) {
  const Input in = load_input(args.input);
  const pm_matrix* source = in.matrix.get();
  if (args.has_offset && !args.has_pad) throw InputError("--offset requires --pad-to");
  Matrix padded;
  if (args.has_pad) {
    padded = make_matrix(
        [&](pm_matrix** out) { return pm_embed(source, args.pad_to, args.offset, out); },
        "embedding");
    source = padded.get();
  }
  const Matrix a1 = make_matrix(
      [&](pm_matrix** out) { return pm_block_trace_map(source, args.n, args.m, out); },
      "block trace map");
  const Matrix a2 = make_matrix(
      [&](pm_matrix** out) { return pm_diagonal_block_sum(source, args.n, args.m, out); },
      "diagonal block sum");

  if (args.verify) {
    const Matrix plain = make_matrix(
        [&](pm_matrix** out) {
          return pm_oracle_embed_shift(in.matrix.get(), args.has_pad ? args.pad_to
                                                                     : pm_matrix_rows(in.matrix.get()),
                                       args.offset, 0.0, out);
        },
        "oracle embed");
    pm_matrix* o1 = nullptr;
    pm_matrix* o2 = nullptr;
    check(pm_oracle_portrait(plain.get(), args.n, args.m, &o1, &o2), "oracle portrait");
    const Matrix h1(o1), h2(o2);
    const double worst = std::max(max_abs_diff(a1.get(), h1.get()), max_abs_diff(a2.get(), h2.get()));
    if (!(worst <= oracle_tolerance))
      throw OracleMismatch("portrait differs from oracle by " + short_number(worst));
  }

  if (args.out.empty()) {
    ordered_json j;
    j["a1"] = ordered_json::parse(matrix_json(a1.get()));
    j["a2"] = ordered_json::parse(matrix_json(a2.get()));
    std::cout << j.dump(2) << '\n';
  } else {
    emit(matrix_json(a1.get()), args.out + ".a1.json");
    emit(matrix_json(a2.get()), args.out + ".a2.json");
  }
  return 0;
}

struct CheckArgs {
  std::string input;
  std::string kind = "subadd";
  std::size_t n = 0, m = 0, pad_to = 0, offset = 0;
  bool has_nm = false, has_pad = false, has_offset = false, has_x = false;
  std::vector<std::size_t> radices;
  double x = 0.0;
  double tol = 1e-9;
  std::string out;
  bool bits = false;
  bool verify = false;
};

CheckSpec build_spec(const CheckArgs& args, std::size_t dim) {
  CheckSpec spec;
  const auto kind = kKinds.find(args.kind);
  if (kind == kKinds.end()) throw InputError("unknown --kind " + args.kind);
  spec.kind = kind->second;
  spec.tol = args.tol;
  if (!std::isfinite(args.tol)) throw InputError("--tol must be finite");
  if (args.has_offset && !args.has_pad && spec.kind != Kind::Shifted)
    throw InputError("--offset requires --pad-to");

  if (spec.kind == Kind::StrongSubadditivity) {
    if (args.radices.size() != 3) throw InputError("ssa needs --radices a,b,c");
    std::copy(args.radices.begin(), args.radices.end(), spec.radices.begin());
    return spec;
  }
  if (!args.has_nm) throw InputError("--n and --m are required for kind " + args.kind);
  spec.n = args.n;
  spec.m = args.m;
  if (args.has_pad) {
    spec.pad_to = args.pad_to;
    spec.offset = args.offset;
  } else if (spec.kind == Kind::Shifted) {
    spec.pad_to = dim;
    spec.offset = args.offset;
  }
  if (args.has_x) {
    if (spec.kind != Kind::Shifted) throw InputError("--x only applies to kind shifted");
    spec.x = args.x;
  }
  return spec;
}

int cmd_check(const CheckArgs& args) {
  const Input in = load_input(args.input);
  CheckSpec spec = build_spec(args, pm_matrix_rows(in.matrix.get()));

  const pm_matrix* source = in.matrix.get();
  Matrix padded;
  if (spec.kind == Kind::Scaled && spec.pad_to != 0) {
    padded = make_matrix(
        [&](pm_matrix** out) { return pm_embed(source, spec.pad_to, spec.offset, out); },
        "embedding");
    source = padded.get();
  }
  if (spec.kind == Kind::Shifted) spec.x = resolve_shift(source, spec);

  const Report report = run_check(source, spec);
  if (args.verify) {
    const double worst = oracle_discrepancy(source, spec, report.get());
    if (!(worst <= oracle_tolerance))
      throw OracleMismatch("report differs from oracle by " + short_number(worst));
  }

  ordered_json j = report_json(report.get(), args.bits);
  ordered_json params = ordered_json::object();
  params["kind"] = args.kind;
  if (spec.kind == Kind::StrongSubadditivity) {
    params["radices"] = spec.radices;
  } else {
    params["n"] = spec.n;
    params["m"] = spec.m;
  }
  if (spec.pad_to != 0) {
    params["pad_to"] = spec.pad_to;
    params["offset"] = spec.offset;
  }
  if (spec.x) params["x"] = *spec.x;
  j["parameters"] = params;
  j["input_digest"] = in.digest;
  emit(j.dump(2) + "\n", args.out);
  return pm_report_satisfied(report.get()) ? 0 : 1;
}

struct MutinfoArgs {
  std::string input;
  std::size_t n = 0, m = 0;
  std::string out;
  bool bits = false;
  bool verify = false;
};

int cmd_mutinfo(const MutinfoArgs& args) {
  const Input in = load_input(args.input);
  const pm_matrix* a = in.matrix.get();
  pm_mutinfo direct{}, embedded{};
  check(pm_mutual_information(a, args.n, args.m, &direct), "mutual information");
  check(pm_mutual_information_embedded(a, args.n, args.m, &embedded), "mutual information");

  if (args.verify) {
    const double s = oracle_entropy(a);
    const auto [s1, s2] = oracle_portrait_entropies(a, args.n, args.m);
    const double worst = std::max({std::abs(s1 + s2 - s - direct.value),
                                   std::abs(s - direct.entropy_joint),
                                   std::abs(s1 - direct.entropy_part1),
                                   std::abs(s2 - direct.entropy_part2),
                                   std::abs(embedded.value - direct.value)});
    if (!(worst <= oracle_tolerance))
      throw OracleMismatch("mutual information differs from oracle by " + short_number(worst));
  }

  const double unit = args.bits ? std::numbers::ln2 : 1.0;
  ordered_json j;
  j["quantity"] = "mutual_information";
  j["unit"] = args.bits ? "bits" : "nats";
  j["value"] = direct.value / unit;
  j["value_via_embedding"] = embedded.value / unit;
  j["entropy_joint"] = direct.entropy_joint / unit;
  j["entropy_part1"] = direct.entropy_part1 / unit;
  j["entropy_part2"] = direct.entropy_part2 / unit;
  j["parameters"] = {{"n", args.n}, {"m", args.m}};
  j["input_digest"] = in.digest;
  emit(j.dump(2) + "\n", args.out);
  return 0;
}

struct GenArgs {
  std::string kind;
  std::size_t dim = 0, n = 0, m = 0, terms = 2;
  bool has_dim = false, has_nm = false;
  double scale = 1.0;
  std::uint64_t seed = 0, stream = 0;
  bool has_seed = false;
  std::string out;
};

int cmd_gen(const GenArgs& args) {
  const std::uint64_t seed = args.has_seed ? args.seed : default_seed();
  pm_generator* raw = nullptr;
  check(pm_generator_create(seed, args.stream, &raw), "generator");
  const Generator gen(raw);
  auto need_dim = [&] {
    if (!args.has_dim) throw InputError("--dim is required for kind " + args.kind);
    return args.dim;
  };
  Matrix m;
  if (args.kind == "pure") {
    m = make_matrix([&](pm_matrix** o) { return pm_gen_pure_density(gen.get(), need_dim(), o); }, "gen");
  } else if (args.kind == "mixed") {
    m = make_matrix([&](pm_matrix** o) { return pm_gen_mixed_density(gen.get(), need_dim(), o); }, "gen");
  } else if (args.kind == "hermitian") {
    m = make_matrix(
        [&](pm_matrix** o) { return pm_gen_hermitian(gen.get(), need_dim(), args.scale, o); }, "gen");
  } else if (args.kind == "unitary") {
    m = make_matrix([&](pm_matrix** o) { return pm_gen_haar_unitary(gen.get(), need_dim(), o); }, "gen");
  } else if (args.kind == "separable") {
    if (!args.has_nm) throw InputError("separable needs --n and --m");
    if (args.has_dim && args.dim != args.n * args.m) throw InputError("--dim must equal n*m");
    m = make_matrix(
        [&](pm_matrix** o) { return pm_gen_separable(gen.get(), args.n, args.m, args.terms, o); },
        "gen");
  } else {
    throw InputError("unknown --kind " + args.kind);
  }
  emit(matrix_json(m.get()), args.out);
  return 0;
}

struct BatchArgs {
  std::string kind = "subadd";
  std::vector<std::size_t> dims;
  std::vector<std::size_t> radices;
  std::size_t trials = 0, n = 0, m = 0, pad_to = 0;
  bool has_nm = false, has_pad = false;
  std::uint64_t seed = 0, stream = 0;
  bool has_seed = false;
  double tol = 1e-9;
  std::string out;
  bool verify = false;
};

struct TrialResult {
  std::vector<double> slacks;
  std::string error;
  bool oracle_failed = false;
  double oracle_worst = 0.0;
};

struct DimPlan {
  std::size_t dim = 0;       // sampled dimension
  std::size_t work_dim = 0;  // dimension the maps act on (after padding)
  std::vector<std::pair<std::size_t, std::size_t>> factors;
  std::array<std::size_t, 3> radices{0, 0, 0};  // ssa only
};

/// Splits `dim` into three radices, each >= 2, taking smallest factors first.
std::optional<std::array<std::size_t, 3>> three_radices(std::size_t dim) {
  auto smallest_factor = [](std::size_t d) -> std::size_t {
    for (std::size_t p = 2; p * p <= d; ++p)
      if (d % p == 0) return p;
    return d;
  };
  if (dim < 8) return std::nullopt;
  const std::size_t a = smallest_factor(dim);
  const std::size_t rest = dim / a;
  const std::size_t b = smallest_factor(rest);
  if (b == rest) return std::nullopt;
  return std::array<std::size_t, 3>{a, b, rest / b};
}

std::size_t smallest_composite_at_least(std::size_t dim) {
  std::size_t d = std::max<std::size_t>(dim, 4);
  while (factorizations(d).empty()) ++d;
  return d;
}

TrialResult run_trial(const BatchArgs& args, Kind kind, const DimPlan& plan,
                      std::uint64_t seed, std::uint64_t stream) {
  TrialResult result;
  try {
    pm_generator* raw = nullptr;
    check(pm_generator_create(seed, stream, &raw), "generator");
    const Generator gen(raw);

    auto verify = [&](const pm_matrix* a, const CheckSpec& spec, const pm_report* r) {
      if (!args.verify) return;
      const double worst = oracle_discrepancy(a, spec, r);
      result.oracle_worst = std::max(result.oracle_worst, worst);
      if (!(worst <= oracle_tolerance)) result.oracle_failed = true;
    };

    CheckSpec spec;
    spec.kind = kind;
    spec.tol = args.tol;
    switch (kind) {
      case Kind::Subadditivity:
      case Kind::Scaled: {
        Matrix a = make_matrix(
            [&](pm_matrix** o) { return pm_gen_mixed_density(gen.get(), plan.dim, o); }, "gen");
        if (kind == Kind::Scaled) {
          double u = 0.0;
          check(pm_generator_uniform(gen.get(), &u), "uniform");
          a = scaled(a.get(), 0.1 + 9.9 * u);
        }
        if (plan.work_dim != plan.dim) {
          spec.pad_to = plan.work_dim;
          if (kind == Kind::Scaled) {
            a = make_matrix([&](pm_matrix** o) { return pm_embed(a.get(), plan.work_dim, 0, o); },
                            "embed");
            spec.pad_to = 0;
          }
        }
        for (const auto& [n, m] : plan.factors) {
          spec.n = n;
          spec.m = m;
          const Report r = run_check(a.get(), spec);
          result.slacks.push_back(pm_report_slack(r.get()));
          verify(a.get(), spec, r.get());
        }
        break;
      }
      case Kind::Shifted: {
        const Matrix a = make_matrix(
            [&](pm_matrix** o) { return pm_gen_hermitian(gen.get(), plan.dim, 1.0, o); }, "gen");
        spec.pad_to = plan.work_dim;
        const double base = resolve_shift(a.get(), spec);
        for (const double extra : {0.0, 0.1, 1.0}) {
          spec.x = base + extra;
          for (const auto& [n, m] : plan.factors) {
            spec.n = n;
            spec.m = m;
            const Report r = run_check(a.get(), spec);
            result.slacks.push_back(pm_report_slack(r.get()));
            verify(a.get(), spec, r.get());
          }
        }
        break;
      }
      case Kind::StrongSubadditivity: {
        const Matrix a = make_matrix(
            [&](pm_matrix** o) { return pm_gen_mixed_density(gen.get(), plan.dim, o); }, "gen");
        spec.radices = plan.radices;
        const Report r = run_check(a.get(), spec);
        result.slacks.push_back(pm_report_slack(r.get()));
        verify(a.get(), spec, r.get());
        break;
      }
    }
  } catch (const std::exception& e) {
    result.error = e.what();
  }
  return result;
}

int cmd_batch(const BatchArgs& args) {
  const auto kind_it = kKinds.find(args.kind);
  if (kind_it == kKinds.end()) throw InputError("unknown --kind " + args.kind);
  const Kind kind = kind_it->second;
  if (!std::isfinite(args.tol)) throw InputError("--tol must be finite");
  const std::uint64_t seed = args.has_seed ? args.seed : default_seed();

  std::vector<DimPlan> plans;
  if (kind == Kind::StrongSubadditivity) {
    if (args.radices.empty()) {
      if (args.dims.empty()) throw InputError("ssa needs --radices or --dims");
      for (std::size_t d : args.dims) {
        const auto r = three_radices(d);
        if (!r) throw InputError("dimension " + std::to_string(d) + " has no three-factor split");
        plans.push_back({d, d, {}, *r});
      }
    } else {
      if (args.radices.size() != 3) throw InputError("ssa needs --radices a,b,c");
      const std::size_t product = args.radices[0] * args.radices[1] * args.radices[2];
      if (product == 0) throw InputError("radices must be positive");
      for (std::size_t d : args.dims)
        if (d != product) throw InputError("ssa dims must equal the radices product");
      plans.push_back({product, product, {}, {args.radices[0], args.radices[1], args.radices[2]}});
    }
  } else {
    if (args.dims.empty()) throw InputError("--dims is required");
    for (std::size_t d : args.dims) {
      if (d == 0) throw InputError("dimensions must be positive");
      DimPlan plan{d, d, {}};
      if (args.has_pad) {
        if (args.pad_to < d) throw InputError("--pad-to is smaller than a dimension");
        plan.work_dim = args.pad_to;
      } else if (kind == Kind::Shifted) {
        plan.work_dim = factorizations(d).empty() ? smallest_composite_at_least(d) : d;
      }
      if (args.has_nm) {
        if (args.n * args.m != plan.work_dim)
          throw InputError("--n * --m does not match dimension " + std::to_string(plan.work_dim));
        plan.factors.emplace_back(args.n, args.m);
      } else {
        plan.factors = factorizations(plan.work_dim);
      }
      if (plan.factors.empty())
        throw InputError("dimension " + std::to_string(plan.work_dim) +
                         " has no nontrivial factorization; use --pad-to");
      plans.push_back(plan);
    }
  }

  const std::size_t total = plans.size() * args.trials;
  std::vector<TrialResult> results(total);
  std::atomic<std::size_t> next{0};
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), total));
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t idx = next++; idx < total; idx = next++) {
          const DimPlan& plan = plans[idx / args.trials];
          results[idx] = run_trial(args, kind, plan, seed, args.stream + idx);
        }
      });
    }
  }

  for (const TrialResult& r : results)
    if (!r.error.empty()) throw InputError(r.error);

  ordered_json summary;
  summary["command"] = "batch";
  summary["kind"] = args.kind;
  summary["seed"] = seed;
  summary["stream"] = args.stream;
  summary["trials"] = args.trials;
  summary["tolerance"] = args.tol;
  std::size_t all_checks = 0, all_violations = 0;
  double all_min = std::numeric_limits<double>::infinity(), all_sum = 0.0, oracle_worst = 0.0;
  bool oracle_failed = false;
  ordered_json per_dim = ordered_json::array();
  for (std::size_t p = 0; p < plans.size(); ++p) {
    std::size_t checks = 0, violations = 0;
    double mn = std::numeric_limits<double>::infinity(), sum = 0.0;
    for (std::size_t t = 0; t < args.trials; ++t) {
      const TrialResult& r = results[p * args.trials + t];
      oracle_failed = oracle_failed || r.oracle_failed;
      oracle_worst = std::max(oracle_worst, r.oracle_worst);
      for (double s : r.slacks) {
        ++checks;
        if (s < -args.tol) ++violations;
        mn = std::min(mn, s);
        sum += s;
      }
    }
    ordered_json entry;
    entry["dim"] = plans[p].dim;
    if (plans[p].work_dim != plans[p].dim) entry["padded_dim"] = plans[p].work_dim;
    ordered_json fs = ordered_json::array();
    if (kind == Kind::StrongSubadditivity) {
      const auto& r = plans[p].radices;
      fs.push_back(std::to_string(r[0]) + "x" + std::to_string(r[1]) + "x" + std::to_string(r[2]));
    }
    for (const auto& [n, m] : plans[p].factors) fs.push_back(std::to_string(n) + "x" + std::to_string(m));
    entry["factorizations"] = fs;
    entry["checks"] = checks;
    entry["violations"] = violations;
    entry["min_slack"] = checks ? ordered_json(mn) : ordered_json(nullptr);
    entry["mean_slack"] = checks ? ordered_json(sum / static_cast<double>(checks)) : ordered_json(nullptr);
    per_dim.push_back(entry);
    all_checks += checks;
    all_violations += violations;
    all_min = std::min(all_min, mn);
    all_sum += sum;
  }
  summary["dims"] = per_dim;
  summary["checks"] = all_checks;
  summary["violations"] = all_violations;
  summary["min_slack"] = all_checks ? ordered_json(all_min) : ordered_json(nullptr);
  summary["mean_slack"] =
      all_checks ? ordered_json(all_sum / static_cast<double>(all_checks)) : ordered_json(nullptr);
  summary["satisfied"] = all_violations == 0;
  if (args.verify) summary["oracle_max_discrepancy"] = oracle_worst;
  emit(summary.dump(2) + "\n", args.out);

  if (oracle_failed)
    throw OracleMismatch("batch results differ from oracle by " + short_number(oracle_worst));
  return all_violations == 0 ? 0 : 1;
}

}  // namespace
}  // namespace portrait_cli

int main(int argc, char** argv) {
  using namespace portrait_cli;

  CLI::App app{"Portrait maps, matrix entropies and entropic inequality checks"};
  app.require_subcommand(1);
  std::function<int()> action;

  PortraitArgs pa;
  auto* portrait = app.add_subcommand("portrait", "Write the two portraits A1, A2 of a matrix");
  portrait->add_option("input", pa.input, "MatrixFile")->required();
  portrait->add_option("--n", pa.n, "Number of blocks per side")->required();
  portrait->add_option("--m", pa.m, "Block size")->required();
  auto* p_pad = portrait->add_option("--pad-to", pa.pad_to, "Zero-pad to this dimension first");
  auto* p_off = portrait->add_option("--offset", pa.offset, "Placement offset for padding");
  portrait->add_option("--out", pa.out, "Output prefix (writes PREFIX.a1.json, PREFIX.a2.json)");
  portrait->add_flag("--verify-oracle", pa.verify, "Cross-check against the brute-force oracle");
  portrait->add_option("--oracle-tol", oracle_tolerance, "Accepted oracle disagreement")
      ->check(CLI::NonNegativeNumber);
  portrait->callback([&] {
    pa.has_pad = p_pad->count() > 0;
    pa.has_offset = p_off->count() > 0;
    action = [&] { return cmd_portrait(pa); };
  });

  CheckArgs ca;
  auto* check_cmd = app.add_subcommand("check", "Evaluate an entropic inequality and write a report");
  check_cmd->add_option("input", ca.input, "MatrixFile")->required();
  check_cmd->add_option("--kind", ca.kind, "subadd | scaled | shifted | ssa")
      ->check(CLI::IsMember({"subadd", "scaled", "shifted", "ssa"}));
  auto* c_n = check_cmd->add_option("--n", ca.n, "Number of blocks per side");
  auto* c_m = check_cmd->add_option("--m", ca.m, "Block size");
  check_cmd->add_option("--radices", ca.radices, "Three radices for ssa, e.g. 2,2,2")->delimiter(',');
  auto* c_pad = check_cmd->add_option("--pad-to", ca.pad_to, "Zero-pad to this dimension");
  auto* c_off = check_cmd->add_option("--offset", ca.offset, "Placement offset for padding");
  auto* c_x = check_cmd->add_option("--x", ca.x, "Identity shift (shifted; default |lambda_min|)");
  check_cmd->add_option("--tol", ca.tol, "Slack tolerance; negative values demand a margin");
  check_cmd->add_option("--out", ca.out, "Report path (default stdout)");
  check_cmd->add_flag("--bits", ca.bits, "Display entropies in bits");
  check_cmd->add_flag("--verify-oracle", ca.verify, "Cross-check against the brute-force oracle");
  check_cmd->add_option("--oracle-tol", oracle_tolerance, "Accepted oracle disagreement")
      ->check(CLI::NonNegativeNumber);
  check_cmd->callback([&] {
    ca.has_nm = c_n->count() > 0 && c_m->count() > 0;
    ca.has_pad = c_pad->count() > 0;
    ca.has_offset = c_off->count() > 0;
    ca.has_x = c_x->count() > 0;
    action = [&] { return cmd_check(ca); };
  });

  MutinfoArgs ma;
  auto* mutinfo = app.add_subcommand("mutinfo", "Mutual matrix information of a density matrix");
  mutinfo->add_option("input", ma.input, "MatrixFile")->required();
  mutinfo->add_option("--n", ma.n, "Number of blocks per side")->required();
  mutinfo->add_option("--m", ma.m, "Block size")->required();
  mutinfo->add_option("--out", ma.out, "Output path (default stdout)");
  mutinfo->add_flag("--bits", ma.bits, "Display entropies in bits");
  mutinfo->add_flag("--verify-oracle", ma.verify, "Cross-check against the brute-force oracle");
  mutinfo->add_option("--oracle-tol", oracle_tolerance, "Accepted oracle disagreement")
      ->check(CLI::NonNegativeNumber);
  mutinfo->callback([&] { action = [&] { return cmd_mutinfo(ma); }; });

  GenArgs ga;
  auto* gen = app.add_subcommand("gen", "Generate a random matrix");
  gen->add_option("--kind", ga.kind, "pure | mixed | hermitian | separable | unitary")
      ->required()
      ->check(CLI::IsMember({"pure", "mixed", "hermitian", "separable", "unitary"}));
  auto* g_dim = gen->add_option("--dim", ga.dim, "Dimension");
  auto* g_n = gen->add_option("--n", ga.n, "Left factor (separable)");
  auto* g_m = gen->add_option("--m", ga.m, "Right factor (separable)");
  gen->add_option("--terms", ga.terms, "Number of product terms (separable)");
  gen->add_option("--scale", ga.scale, "Scale (hermitian)");
  auto* g_seed = gen->add_option("--seed", ga.seed, "Seed (default $PORTRAIT_SEED or 0)");
  gen->add_option("--stream", ga.stream, "Stream id");
  gen->add_option("--out", ga.out, "Output path (default stdout)");
  gen->callback([&] {
    ga.has_dim = g_dim->count() > 0;
    ga.has_nm = g_n->count() > 0 && g_m->count() > 0;
    ga.has_seed = g_seed->count() > 0;
    action = [&] { return cmd_gen(ga); };
  });

  BatchArgs ba;
  auto* batch = app.add_subcommand("batch", "Run a randomized inequality sweep");
  batch->add_option("--kind", ba.kind, "subadd | scaled | shifted | ssa")
      ->check(CLI::IsMember({"subadd", "scaled", "shifted", "ssa"}));
  batch->add_option("--dims", ba.dims, "Comma-separated dimensions")->delimiter(',');
  batch->add_option("--radices", ba.radices, "Three radices for ssa")->delimiter(',');
  batch->add_option("--trials", ba.trials, "Trials per dimension")->required();
  auto* b_n = batch->add_option("--n", ba.n, "Restrict to one factorization");
  auto* b_m = batch->add_option("--m", ba.m, "Restrict to one factorization");
  auto* b_pad = batch->add_option("--pad-to", ba.pad_to, "Zero-pad every sample to this dimension");
  auto* b_seed = batch->add_option("--seed", ba.seed, "Seed (default $PORTRAIT_SEED or 0)");
  batch->add_option("--stream", ba.stream, "Base stream id; trial k uses stream + k");
  batch->add_option("--tol", ba.tol, "Slack tolerance");
  batch->add_option("--out", ba.out, "Summary path (default stdout)");
  batch->add_flag("--verify-oracle", ba.verify, "Cross-check every report against the oracle");
  batch->add_option("--oracle-tol", oracle_tolerance, "Accepted oracle disagreement")
      ->check(CLI::NonNegativeNumber);
  batch->callback([&] {
    ba.has_nm = b_n->count() > 0 && b_m->count() > 0;
    ba.has_pad = b_pad->count() > 0;
    ba.has_seed = b_seed->count() > 0;
    action = [&] { return cmd_batch(ba); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "portrait: error: " << e.what() << '\n';
    return 2;
  }

  try {
    return action();
  } catch (const OracleMismatch& e) {
    std::cerr << "portrait: oracle mismatch: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "portrait: error: " << e.what() << '\n';
    return 2;
  }
}
