#include <algorithm>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "knotdiff/chain.hpp"
#include "knotdiff/group.hpp"
#include "knotdiff/invariants.hpp"
#include "knotdiff/json_io.hpp"
#include "knotdiff/system.hpp"

namespace kd = knotdiff;

namespace {

struct RunConfig {
  std::string format = "text";
  int cap = kd::kDefaultWordCap;
  unsigned seed = 0;  // reserved for randomized subcommands; parsed, unused
};

bool want_json(const RunConfig& cfg) { return cfg.format == "json"; }

kd::Diagram load_pd(const std::string& path) {
  return kd::parse_pd(kd::read_text_file(path));
}

std::string label_only(const kd::ClassLabel& c) { return c; }

std::string status_text(kd::VanishStatus s) {
  switch (s) {
    case kd::VanishStatus::pass: return "PASS";
    case kd::VanishStatus::fail: return "FAIL";
    default: return "INFO";
  }
}

int cmd_resolve(const RunConfig& cfg, const std::string& pd_path,
                const std::string& word) {
  kd::Diagram d = load_pd(pd_path).resolved(kd::Word(word));
  if (want_json(cfg))
    std::cout << kd::resolve_to_json(d);
  else
    std::cout << kd::serialize_pd(d) << "\n";
  return 0;
}

int cmd_sum(const RunConfig& cfg, const std::string& pd_path,
            const std::string& mode) {
  kd::ResolutionSystem sys = kd::knot_system(load_pd(pd_path));
  if (mode == "alt") {
    auto s = kd::alternating_sum(sys, cfg.cap);
    std::cout << (want_json(cfg) ? kd::sum_to_json(s)
                                 : kd::format_sum(s, label_only) + "\n");
  } else {
    auto s = kd::weighted_sum(sys, cfg.cap);
    std::cout << (want_json(cfg)
                      ? kd::weighted_to_json(s)
                      : kd::format_sum(s, kd::format_word_class) + "\n");
  }
  return 0;
}

int cmd_boundary(const RunConfig& cfg, const std::string& chain_path) {
  kd::ChainElement c = kd::chain_from_json(kd::read_text_file(chain_path));
  kd::ChainElement out = kd::boundary(c);
  if (want_json(cfg))
    std::cout << kd::chain_to_json(out);
  else
    std::cout << "degree " << out.degree << ": "
              << kd::format_sum(out.terms, kd::format_word_class) << "\n";
  return 0;
}

int cmd_verify(const RunConfig& cfg, const std::string& pd_path, int order,
               const std::string& which) {
  kd::Diagram d = load_pd(pd_path);
  std::function<kd::Rat(const kd::Diagram&)> inv;
  if (which == "v2") {
    if (order != 2)
      kd::fail(kd::ErrorKind::index_out_of_range,
               "v2 is an order-2 invariant; use --invariant jones-series for "
               "other orders");
    inv = [](const kd::Diagram& k) { return kd::Rat(kd::v2(k)); };
  } else {
    inv = [order](const kd::Diagram& k) {
      return kd::jones_series_coefficient(k, order,
                                          std::max(order, kd::kDefaultSeriesOrder));
    };
  }
  kd::VanishingReport rep = kd::vassiliev_vanishing_check(inv, d, order, cfg.cap);
  if (want_json(cfg))
    std::cout << kd::vanishing_to_json(rep);
  else
    std::cout << "r=" << rep.r << " order=" << rep.order
              << " value=" << kd::to_string(rep.value)
              << " status=" << status_text(rep.status) << "\n";
  return 0;
}

std::vector<kd::ChainElement> load_chain_list(const nlohmann::json& o,
                                              const char* key,
                                              const std::filesystem::path& base) {
  std::vector<kd::ChainElement> out;
  if (!o.contains(key)) return out;
  for (const auto& entry : o.at(key)) {
    std::filesystem::path p = entry.get<std::string>();
    if (p.is_relative()) p = base / p;
    out.push_back(kd::chain_from_json(kd::read_text_file(p.string())));
  }
  return out;
}

int cmd_rank(const RunConfig& cfg, const std::string& manifest_path) {
  nlohmann::json o;
  try {
    o = nlohmann::json::parse(kd::read_text_file(manifest_path));
  } catch (const kd::Error&) {
    throw;
  } catch (const std::exception& e) {
    kd::fail(kd::ErrorKind::malformed_entry,
             std::string("bad manifest JSON: ") + e.what());
  }
  std::filesystem::path base =
      std::filesystem::path(manifest_path).parent_path();
  std::vector<kd::ChainElement> gens_r = load_chain_list(o, "gens_r", base);
  std::vector<kd::ChainElement> gens_r1 = load_chain_list(o, "gens_r1", base);
  kd::QuotientResult q = kd::difference_rank(gens_r, gens_r1);
  if (want_json(cfg)) {
    std::cout << kd::quotient_to_json(q, static_cast<int>(gens_r.size()),
                                      static_cast<int>(gens_r1.size()));
  } else {
    std::cout << "sampled subquotient\n"
              << "generators: " << gens_r.size() << "\n"
              << "higher_generators: " << gens_r1.size() << "\n"
              << "basis_size: " << q.rows << "\n"
              << "rank_span: " << q.rank_a << "\n"
              << "rank_boundaries: " << q.rank_b << "\n"
              << "rank_quotient: " << q.rank_quotient << "\n";
    std::cout << "torsion_factors:";
    if (q.torsion.empty()) std::cout << " none";
    for (const auto& t : q.torsion) std::cout << " " << t.str();
    std::cout << "\n";
  }
  return 0;
}

int cmd_invariant(const RunConfig& cfg, const std::string& pd_path,
                  int series_order) {
  kd::Diagram d = load_pd(pd_path);
  if (want_json(cfg)) {
    std::cout << kd::invariant_to_json(d, series_order);
    return 0;
  }
  std::cout << "jones: " << kd::jones(d).str() << "\n"
            << "conway: " << kd::conway(d).str() << "\n"
            << "v2: " << kd::v2(d).str() << "\n";
  for (int n = 0; n <= series_order; ++n)
    std::cout << "series[" << n << "]: "
              << kd::to_string(kd::jones_series_coefficient(d, n, series_order))
              << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"regional-change calculus on knot diagrams"};
  app.require_subcommand(1);
  app.fallthrough();  // accept global flags after the subcommand name too
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--cap", cfg.cap, "word-enumeration cap on r")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for randomized subcommands (reserved)");

  std::string pd_path, word, chain_path, manifest_path;
  std::string mode = "alt", which = "jones-series";
  int order = 2, series_order = kd::kDefaultSeriesOrder;

  CLI::App* resolve = app.add_subcommand("resolve", "resolve double points per a word");
  resolve->add_option("--pd", pd_path, "diagram file")->required();
  resolve->add_option("--word", word, "choice word over {a,b}");

  CLI::App* sum = app.add_subcommand("sum", "alternating or word-weighted sum");
  sum->add_option("--pd", pd_path, "diagram file")->required();
  sum->add_option("--mode", mode, "alt | weighted")
      ->check(CLI::IsMember({"alt", "weighted"}))
      ->capture_default_str();

  CLI::App* boundary = app.add_subcommand("boundary", "boundary of a chain file");
  boundary->add_option("--chain", chain_path, "chain JSON file")->required();

  CLI::App* verify = app.add_subcommand("verify", "vanishing check on a singular diagram");
  verify->add_option("--pd", pd_path, "diagram file")->required();
  verify->add_option("--order", order, "invariant order")->capture_default_str();
  verify->add_option("--invariant", which, "v2 | jones-series")
      ->check(CLI::IsMember({"v2", "jones-series"}))
      ->capture_default_str();

  CLI::App* rank = app.add_subcommand("rank", "sampled difference-group rank");
  rank->add_option("--manifest", manifest_path,
                   "JSON manifest listing gens_r / gens_r1 chain files")
      ->required();

  CLI::App* invariant = app.add_subcommand("invariant", "jones/conway/v2/series of a diagram");
  invariant->add_option("--pd", pd_path, "diagram file")->required();
  invariant->add_option("--series-order", series_order, "series truncation order")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (resolve->parsed()) return cmd_resolve(cfg, pd_path, word);
    if (sum->parsed()) return cmd_sum(cfg, pd_path, mode);
    if (boundary->parsed()) return cmd_boundary(cfg, chain_path);
    if (verify->parsed()) return cmd_verify(cfg, pd_path, order, which);
    if (rank->parsed()) return cmd_rank(cfg, manifest_path);
    if (invariant->parsed()) return cmd_invariant(cfg, pd_path, series_order);
  } catch (const kd::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
