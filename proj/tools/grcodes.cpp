// Copyright 2026 The grcodes Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// grcodes: command-line front end for the constacyclic code library.
//
// Exit codes: 0 success, 1 usage or precondition error, 2 verification
// failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "grcodes.hpp"

namespace {

using grcodes::BigInt;
using grcodes::GrElement;
using grcodes::QrElement;
using grcodes::Word;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;
constexpr const char* kWatermark = "unverified hypothesis: locality guard bypassed with --force";

struct Config {
  std::string ring = "5,2,1";
  std::string lambda;
  unsigned s = 1;
  long i = -1;
  std::uint64_t budget = 1'000'000;
  bool force = false;
  std::string output = "text";
  std::string out_file;
  std::string suite = "all";
  std::uint64_t seed = 20260401;
  std::size_t trials = 1000;
  std::string word, word1, word2;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::int64_t> parse_int_list(const std::string& flag, const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string field;
  std::size_t pos = 0;
  while (std::getline(ss, field, ',')) {
    ++pos;
    try {
      std::size_t used = 0;
      long long v = std::stoll(field, &used);
      if (used != field.size()) throw std::invalid_argument(field);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError(flag + ": field " + std::to_string(pos) + " ('" + field + "') is not an integer");
    }
  }
  if (out.empty()) throw UsageError(flag + ": expected a comma-separated integer list");
  return out;
}

grcodes::RingPtr parse_ring(const std::string& text) {
  auto v = parse_int_list("--ring", text);
  if (v.size() < 3) throw UsageError("--ring: expected p,a,m[,f_0,...,f_m]");
  for (std::size_t k = 0; k < 3; ++k)
    if (v[k] < 1) throw UsageError("--ring: field " + std::to_string(k + 1) + " must be positive");
  std::optional<std::vector<Word>> f;
  if (v.size() > 3) {
    if (v.size() != 3 + static_cast<std::size_t>(v[2]) + 1)
      throw UsageError("--ring: the modulus needs exactly m+1 = " + std::to_string(v[2] + 1) + " coefficients");
    std::vector<Word> coeffs;
    for (std::size_t k = 3; k < v.size(); ++k) {
      if (v[k] < 0) throw UsageError("--ring: field " + std::to_string(k + 1) + " must be non-negative");
      coeffs.push_back(static_cast<Word>(v[k]));
    }
    f = coeffs;
  }
  return grcodes::GaloisRing::make(static_cast<Word>(v[0]), static_cast<unsigned>(v[1]),
                                   static_cast<unsigned>(v[2]), f);
}

GrElement parse_element(const grcodes::GaloisRing& ring, const std::string& flag, const std::string& text) {
  auto v = parse_int_list(flag, text);
  if (v.size() > ring.m()) throw UsageError(flag + ": at most m = " + std::to_string(ring.m()) + " coefficients");
  return ring.from_coeffs(v);
}

// Flat constant-first list; each coefficient takes m integers.
QrElement parse_word(const grcodes::ConstacyclicRing& ctx, const std::string& flag, const std::string& text) {
  auto v = parse_int_list(flag, text);
  const std::size_t m = ctx.m();
  if (v.size() > ctx.n() * m)
    throw UsageError(flag + ": at most n*m = " + std::to_string(ctx.n() * m) + " integers");
  std::vector<GrElement> coeffs;
  for (std::size_t k = 0; k < v.size(); k += m) {
    std::vector<std::int64_t> block(v.begin() + k, v.begin() + std::min(v.size(), k + m));
    coeffs.push_back(ctx.ring().from_coeffs(block));
  }
  return ctx.from_coeffs(coeffs);
}

json to_json(const GrElement& x) {
  json j = json::array();
  for (Word c : x.coeffs()) j.push_back(c);
  return j;
}

json to_json(const QrElement& f) {
  json j = json::array();
  for (std::size_t k = 0; k < f.ctx().n(); ++k) j.push_back(to_json(f.ctx().coeff(f, k)));
  return j;
}

std::string flat(const QrElement& f) {
  std::string s;
  for (Word w : f.data()) s += (s.empty() ? "" : ",") + std::to_string(w);
  return s;
}

class Output {
 public:
  explicit Output(const Config& cfg) : cfg_(cfg) {}

  void emit(const json& j, const std::string& text, const std::string& csv = {}) {
    std::string body;
    if (cfg_.output == "json")
      body = j.dump(2) + "\n";
    else if (cfg_.output == "csv")
      body = csv.empty() ? json_to_csv(j) : csv;
    else
      body = text;
    if (cfg_.out_file.empty()) {
      std::cout << body;
      return;
    }
    std::ofstream f(cfg_.out_file);
    if (!f) throw UsageError("--out: cannot open " + cfg_.out_file);
    f << body;
  }

 private:
  static std::string json_to_csv(const json& j) {
    std::string s = "key,value\n";
    for (auto it = j.begin(); it != j.end(); ++it) {
      std::string v = it->is_string() ? it->get<std::string>() : it->dump();
      if (v.find(',') != std::string::npos) v = "\"" + [&] {
        std::string e;
        for (char c : v) e += c == '"' ? std::string("\"\"") : std::string(1, c);
        return e;
      }() + "\"";
      s += it.key() + "," + v + "\n";
    }
    return s;
  }

  const Config& cfg_;
};

const char* kind_name(grcodes::UnitKind k) { return k == grcodes::UnitKind::Type1 ? "Type1" : "Type0"; }

GrElement require_lambda(const Config& cfg, const grcodes::GaloisRing& ring) {
  if (cfg.lambda.empty()) throw UsageError("--lambda is required for this command");
  return parse_element(ring, "--lambda", cfg.lambda);
}

std::size_t require_i(const Config& cfg) {
  if (cfg.i < 0) throw UsageError("--i is required for this command");
  return static_cast<std::size_t>(cfg.i);
}

int cmd_ring_info(const Config& cfg, Output& out) {
  auto ring = parse_ring(cfg.ring);
  std::vector<GrElement> teich = ring->teichmuller();
  std::sort(teich.begin(), teich.end(),
            [&](const GrElement& x, const GrElement& y) { return ring->index_of(x) < ring->index_of(y); });
  std::size_t t0 = 0, t1 = 0;
  for (Word idx = 0; idx < ring->size(); ++idx) {
    GrElement x = ring->element(idx);
    if (!ring->is_unit(x)) continue;
    (ring->classify_unit(x).kind == grcodes::UnitKind::Type1 ? t1 : t0)++;
  }
  json j;
  j["p"] = ring->p();
  j["a"] = ring->a();
  j["m"] = ring->m();
  j["modulus"] = ring->modulus();
  j["size"] = std::to_string(ring->p()) + "^" + std::to_string(ring->a() * ring->m());
  j["teichmuller"] = json::array();
  for (const auto& t : teich) j["teichmuller"].push_back(to_json(t));
  j["xi"] = to_json(ring->xi());
  j["units"] = {{"type0", t0}, {"type1", t1}};
  std::ostringstream text;
  grcodes::Poly f;
  for (Word c : ring->modulus()) f.push_back(ring->from_int(static_cast<std::int64_t>(c)));
  std::string fu = grcodes::poly_str(f);
  std::replace(fu.begin(), fu.end(), 'x', 'u');
  text << ring->describe() << ", modulus " << fu << "\n";
  text << "teichmuller (" << teich.size() << "): {";
  for (std::size_t k = 0; k < teich.size(); ++k) text << (k ? "," : "") << teich[k].str();
  text << "}\nxi = " << ring->xi().str() << "\nunits: " << t1 << " Type (1), " << t0 << " Type (0)\n";
  out.emit(j, text.str());
  return kExitOk;
}

int cmd_classify(const Config& cfg, Output& out) {
  auto ring = parse_ring(cfg.ring);
  GrElement lambda = require_lambda(cfg, *ring);
  auto prof = ring->classify_unit(lambda);
  auto digits = ring->teich_digits(lambda);
  json j;
  j["lambda"] = to_json(lambda);
  j["kind"] = kind_name(prof.kind);
  j["xi0"] = to_json(prof.xi0);
  j["xi1"] = to_json(prof.xi1);
  j["z"] = to_json(prof.z);
  j["digits"] = json::array();
  for (const auto& d : digits.digits) j["digits"].push_back(to_json(d));
  j["square"] = ring->is_square_unit(lambda);
  j["dlog_xi0"] = ring->dlog(prof.xi0);
  std::ostringstream text;
  text << "lambda = " << lambda.str() << ": " << kind_name(prof.kind) << " (xi0 = " << prof.xi0.str()
       << ", xi1 = " << prof.xi1.str() << ", z = " << prof.z.str() << "), "
       << (j["square"].get<bool>() ? "square" : "not a square") << "\n";
  out.emit(j, text.str());
  return kExitOk;
}

int cmd_invert(const Config& cfg, Output& out) {
  auto ring = parse_ring(cfg.ring);
  GrElement lambda = require_lambda(cfg, *ring);
  GrElement inv = ring->inv(lambda);
  auto prof = ring->classify_unit(lambda);
  bool t1 = prof.kind == grcodes::UnitKind::Type1;
  auto formula = [&](grcodes::InverseVariant v) {
    return t1 ? grcodes::type1_inverse_formula(*ring, lambda, v) : grcodes::type0_inverse_formula(*ring, lambda, v);
  };
  GrElement corrected = formula(grcodes::InverseVariant::Corrected);
  GrElement printed = formula(grcodes::InverseVariant::Printed);
  json j;
  j["lambda"] = to_json(lambda);
  j["kind"] = kind_name(prof.kind);
  j["inverse"] = to_json(inv);
  j["formula"] = to_json(corrected);
  j["formula_agrees"] = corrected == inv;
  j["printed_formula"] = to_json(printed);
  j["printed_agrees"] = printed == inv;
  std::ostringstream text;
  text << "lambda^{-1} = " << inv.str() << "\nclosed form (corrected): " << corrected.str()
       << "\nclosed form (printed):   " << printed.str() << (printed == inv ? "" : "  [wrong]") << "\n";
  out.emit(j, text.str());
  return corrected == inv ? kExitOk : kExitVerification;
}

grcodes::ChainCode make_code(const Config& cfg) {
  auto ring = parse_ring(cfg.ring);
  GrElement lambda = require_lambda(cfg, *ring);
  auto ctx = grcodes::QuotientRing::make(ring, lambda, cfg.s, grcodes::QuotientMode::Chain, cfg.force);
  return grcodes::build_chain_code(ctx, require_i(cfg));
}

json code_json(const grcodes::ChainCode& c) {
  const auto& R = *c.ctx;
  json j;
  j["p"] = R.ring().p();
  j["a"] = R.ring().a();
  j["m"] = R.ring().m();
  j["s"] = R.s();
  j["lambda"] = to_json(R.lambda());
  j["alpha"] = to_json(R.alpha());
  j["i"] = c.i;
  j["cardinality"] = c.cardinality().str();
  j["generator"] = to_json(c.generator);
  if (R.forced()) j["watermark"] = kWatermark;
  return j;
}

std::string code_text(const grcodes::ChainCode& c) {
  const auto& R = *c.ctx;
  std::ostringstream t;
  if (R.forced()) t << "[" << kWatermark << "]\n";
  t << "C = <(x^4-" << R.alpha().str() << ")^" << c.i << "> in " << R.ring().describe() << "[x]/<x^" << R.n()
    << "-" << R.lambda().str() << ">\n";
  t << "cardinality " << c.cardinality().str();
  if (c.is_zero_code()) t << " (zero code)";
  if (c.is_whole_ring()) t << " (whole ring)";
  t << "\ngenerator " << R.str(c.generator) << "\n";
  return t.str();
}

int cmd_code_info(const Config& cfg, Output& out) {
  auto c = make_code(cfg);
  json j = code_json(c);
  auto basis = grcodes::echelon_basis(c);
  j["echelon_cardinality"] = basis.cardinality().str();
  j["zero_code"] = c.is_zero_code();
  j["self_orthogonal"] = grcodes::self_orthogonal_formula(c);
  std::string text = code_text(c) + "echelon rows " + std::to_string(basis.rows().size()) + ", cardinality " +
                     basis.cardinality().str() + "\n";
  out.emit(j, text);
  return basis.log_cardinality() == c.cardinality().e ? kExitOk : kExitVerification;
}

int cmd_code_dual(const Config& cfg, Output& out) {
  auto c = make_code(cfg);
  auto d = grcodes::dual_descriptor(c);
  auto chk = grcodes::verify_dual(c, d);
  json j;
  j["code"] = code_json(c);
  j["dual"] = code_json(d);
  j["orthogonal"] = chk.orthogonal;
  j["cardinality_product"] = std::to_string(c.ctx->ring().p()) + "^" + std::to_string(chk.log_code + chk.log_claimed);
  j["verified"] = chk.pass();
  std::string text = code_text(c) + "dual:\n" + code_text(d) + "verified: " + (chk.pass() ? "yes" : "NO") + "\n";
  out.emit(j, text);
  return chk.pass() ? kExitOk : kExitVerification;
}

int cmd_code_distances(const Config& cfg, Output& out) {
  auto c = make_code(cfg);
  bool enumerable = c.cardinality().value() <= cfg.budget;
  auto rt_f = grcodes::d_rt_formula(c);
  json j = code_json(c);
  bool agree = true;
  auto side = [&](const char* key, std::size_t formula, std::optional<std::size_t> brute) {
    json s;
    s["formula"] = formula;
    s["bruteforce"] = brute ? json(*brute) : json(nullptr);
    s["agree"] = brute ? json(*brute == formula) : json(nullptr);
    if (brute && *brute != formula) agree = false;
    j[key] = s;
  };
  std::optional<std::size_t> rt_b, h_b;
  if (enumerable) rt_b = grcodes::d_rt_bruteforce(c, cfg.budget).value;
  side("rt", rt_f.value, rt_b);
  std::optional<grcodes::DistanceReport> h_f;
  std::string h_note;
  try {
    h_f = grcodes::d_h_formula(c);
  } catch (const grcodes::PreconditionError& e) {
    h_note = e.what();
  }
  if (enumerable) h_b = grcodes::d_h_bruteforce(c, cfg.budget).value;
  if (h_f) {
    side("hamming", h_f->value, h_b);
    if (h_f->located) j["hamming"]["beta0"] = h_f->located->beta0, j["hamming"]["tau0"] = h_f->located->tau0;
  } else {
    j["hamming"] = {{"formula", nullptr}, {"bruteforce", h_b ? json(*h_b) : json(nullptr)}, {"note", h_note}};
  }
  auto show = [](const json& s) {
    std::string f = s["formula"].is_null() ? "n/a" : s["formula"].dump();
    std::string b = s["bruteforce"].is_null() ? "n/a" : s["bruteforce"].dump();
    std::string a = s.contains("agree") && !s["agree"].is_null() ? (s["agree"].get<bool>() ? " agree" : " DISAGREE") : "";
    return f + "/" + b + a;
  };
  std::string text = code_text(c) + "RT " + show(j["rt"]) + ", Hamming " + show(j["hamming"]) + "\n";
  out.emit(j, text);
  return agree ? kExitOk : kExitVerification;
}

int cmd_code_distribution(const Config& cfg, Output& out) {
  auto c = make_code(cfg);
  const Word p = c.ctx->ring().p();
  auto F = grcodes::rt_distribution_formula(c);
  bool enumerated = false;
  auto O = grcodes::rt_distribution_oracle(c, cfg.budget, &enumerated);
  json j = code_json(c);
  j["oracle"] = enumerated ? "enumeration" : "structural";
  j["distribution"] = json::array();
  std::string csv = "j,A_j\n";
  std::ostringstream text;
  text << code_text(c);
  for (std::size_t k = 0; k < F.size(); ++k) {
    std::string f = grcodes::render_exact(F[k], p);
    std::string o = grcodes::render_exact(O[k], p);
    j["distribution"].push_back({{"j", k}, {"formula", f}, {"oracle", o}});
    csv += std::to_string(k) + "," + f + "\n";
    if (F[k] != 0 || O[k] != 0) text << "A_" << k << " = " << f << (F[k] == O[k] ? "" : "  oracle " + o) << "\n";
  }
  bool sum_ok = grcodes::distribution_total(F) == c.cardinality().value();
  j["sum_matches_cardinality"] = sum_ok;
  j["agree"] = F == O;
  j["printed_sum_matches"] = grcodes::distribution_total(grcodes::rt_distribution_printed(c)) == c.cardinality().value();
  text << "sum = |C|: " << (sum_ok ? "yes" : "NO") << ", oracle (" << j["oracle"].get<std::string>()
       << ") agrees: " << (F == O ? "yes" : "NO") << "\n";
  out.emit(j, text.str(), csv);
  return sum_ok && F == O ? kExitOk : kExitVerification;
}

int cmd_code_enumerate(const Config& cfg, Output& out) {
  auto c = make_code(cfg);
  auto words = grcodes::enumerate_codewords(c, cfg.budget);
  json j = code_json(c);
  j["count"] = words.size();
  j["codewords"] = json::array();
  std::string csv, text = code_text(c);
  for (const auto& w : words) {
    j["codewords"].push_back(to_json(w));
    csv += flat(w) + "\n";
    text += flat(w) + "\n";
  }
  out.emit(j, text, csv);
  return kExitOk;
}

grcodes::CrtSplit make_split(const Config& cfg) {
  auto ring = parse_ring(cfg.ring);
  GrElement lambda = require_lambda(cfg, *ring);
  return grcodes::CrtSplit::make(ring, lambda, cfg.s);
}

int cmd_crt_idempotents(const Config& cfg, Output& out) {
  auto sp = make_split(cfg);
  json j;
  j["delta"] = to_json(sp.delta());
  j["e1"] = to_json(sp.e1());
  j["e2"] = to_json(sp.e2());
  j["ok"] = sp.idempotents_ok();
  std::string text = "delta = " + sp.delta().str() + "\ne1 = " + sp.ambient().str(sp.e1()) +
                     "\ne2 = " + sp.ambient().str(sp.e2()) + "\nidempotent identities: " +
                     (sp.idempotents_ok() ? "hold" : "FAIL") + "\n";
  out.emit(j, text);
  return sp.idempotents_ok() ? kExitOk : kExitVerification;
}

int cmd_crt_split(const Config& cfg, Output& out) {
  auto sp = make_split(cfg);
  if (cfg.word.empty()) throw UsageError("--word is required for crt split");
  QrElement c = parse_word(sp.ambient(), "--word", cfg.word);
  auto [c1, c2] = sp.split(c);
  json j{{"c1", to_json(c1)}, {"c2", to_json(c2)}};
  out.emit(j, "c1 = " + sp.plus().str(c1) + "\nc2 = " + sp.minus().str(c2) + "\n");
  return kExitOk;
}

int cmd_crt_join(const Config& cfg, Output& out) {
  auto sp = make_split(cfg);
  if (cfg.word1.empty() || cfg.word2.empty()) throw UsageError("--c1 and --c2 are required for crt join");
  QrElement c = sp.join(parse_word(sp.plus(), "--c1", cfg.word1), parse_word(sp.minus(), "--c2", cfg.word2));
  json j{{"c", to_json(c)}};
  out.emit(j, "c = " + sp.ambient().str(c) + "\n");
  return kExitOk;
}

int cmd_verify(const Config& cfg, Output& out) {
  grcodes::VerifyParams vp;
  vp.ring = parse_ring(cfg.ring);
  if (!cfg.lambda.empty()) vp.lambda = parse_element(*vp.ring, "--lambda", cfg.lambda);
  vp.s = cfg.s;
  vp.budget = cfg.budget;
  vp.force = cfg.force;
  vp.seed = cfg.seed;
  vp.trials = cfg.trials;
  auto rep = grcodes::run_suite(cfg.suite, vp);
  json j;
  j["suite"] = rep.suite;
  j["claims"] = json::array();
  std::string text, csv = "status,name,detail\n";
  for (const auto& c : rep.claims) {
    std::string status = c.pass ? "PASS" : c.expected_fail ? "XFAIL" : "FAIL";
    j["claims"].push_back({{"name", c.name}, {"status", status}, {"detail", c.detail}});
    text += status + "  " + c.name + (c.detail.empty() ? "" : "  [" + c.detail + "]") + "\n";
    csv += status + ",\"" + c.name + "\",\"" + c.detail + "\"\n";
  }
  j["ok"] = rep.ok();
  text += rep.ok() ? "all claims hold\n" : "verification FAILED\n";
  out.emit(j, text, csv);
  return rep.ok() ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"Type (1) constacyclic codes of length 4p^s over Galois rings"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--ring", cfg.ring, "p,a,m[,f_0,...,f_m] (modulus constant term first)");
  app.add_option("--lambda", cfg.lambda, "shift constant, coefficient list constant term first");
  app.add_option("--s", cfg.s, "length exponent: n = 4p^s");
  app.add_option("--i", cfg.i, "code exponent i in [0, a p^s]");
  app.add_option("--budget", cfg.budget, "largest code enumerated by brute force");
  app.add_flag("--force", cfg.force, "bypass the locality guard (results are unverified)");
  app.add_option("--output", cfg.output, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--out", cfg.out_file, "write output to FILE");
  app.add_option("--seed", cfg.seed, "seed for randomized checks");
  app.add_option("--trials", cfg.trials, "random samples per randomized check");

  int code = kExitOk;
  Output out(cfg);
  auto bind = [&](CLI::App* cmd, int (*fn)(const Config&, Output&)) {
    cmd->callback([&, fn] { code = fn(cfg, out); });
  };
  bind(app.add_subcommand("ring-info", "ring parameters, Teichmuller set, unit counts"), cmd_ring_info);
  bind(app.add_subcommand("classify", "Teichmuller digits and Type of --lambda"), cmd_classify);
  bind(app.add_subcommand("invert", "inverse of --lambda, by search and by closed form"), cmd_invert);

  auto* code_cmd = app.add_subcommand("code", "the code <(x^4-alpha)^i>");
  code_cmd->require_subcommand(1);
  bind(code_cmd->add_subcommand("info", "generator and cardinality"), cmd_code_info);
  bind(code_cmd->add_subcommand("dual", "dual code and its certificate"), cmd_code_dual);
  bind(code_cmd->add_subcommand("distances", "RT and Hamming distances"), cmd_code_distances);
  bind(code_cmd->add_subcommand("rt-distribution", "RT weight distribution"), cmd_code_distribution);
  bind(code_cmd->add_subcommand("enumerate", "list every codeword"), cmd_code_enumerate);

  auto* crt_cmd = app.add_subcommand("crt", "square lambda decomposition");
  crt_cmd->require_subcommand(1);
  auto* split = crt_cmd->add_subcommand("split", "project a word onto both components");
  split->add_option("--word", cfg.word, "word over the ambient ring, flat constant-first list");
  bind(split, cmd_crt_split);
  auto* join = crt_cmd->add_subcommand("join", "combine component words");
  join->add_option("--c1", cfg.word1, "word modulo x^{2p^s} - delta");
  join->add_option("--c2", cfg.word2, "word modulo x^{2p^s} + delta");
  bind(join, cmd_crt_join);
  bind(crt_cmd->add_subcommand("idempotents", "e1 and e2"), cmd_crt_idempotents);

  auto* verify = app.add_subcommand("verify", "run a named verification suite");
  verify->add_option("--suite", cfg.suite, "suite name")->check([](const std::string& s) {
    const auto& names = grcodes::suite_names();
    return s == "all" || std::find(names.begin(), names.end(), s) != names.end() ? std::string{}
                                                                                 : "unknown suite '" + s + "'";
  });
  bind(verify, cmd_verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const grcodes::GuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const grcodes::VerificationFailure& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return kExitVerification;
  } catch (const grcodes::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << " (raise --budget)\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return code;
}
