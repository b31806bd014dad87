// Command-line front end. Exit codes: 0 ok, 1 a requested check failed,
// 2 usage or input error, 3 budget exceeded.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "schreier/errors.hpp"
#include "schreier/estimates.hpp"
#include "schreier/functionals.hpp"
#include "schreier/indices.hpp"
#include "schreier/json_io.hpp"
#include "schreier/norm_cache.hpp"
#include "schreier/suites.hpp"

using namespace schreier;

namespace {

constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

struct FamilyFlags {
  std::string fine, schreier, explicit_file;

  void attach(CLI::App* app) {
    auto* f = app->add_option("--fine", fine, "fine Schreier family F_alpha");
    auto* s = app->add_option("--schreier", schreier, "Schreier family S_alpha");
    auto* e = app->add_option("--explicit", explicit_file, "JSON file with an array of sets");
    f->excludes(s)->excludes(e);
    s->excludes(e);
  }

  Family get() const {
    if (!fine.empty()) return Family::fine_schreier(parse_ordinal(fine));
    if (!schreier.empty()) return Family::schreier(parse_ordinal(schreier));
    if (!explicit_file.empty()) return family_from_json(read_json(explicit_file));
    throw DomainError("one of --fine, --schreier, --explicit is required");
  }

  static Json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open " + path);
    try {
      return Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw ParseError(path + ": " + e.what(), e.byte);
    }
  }
};

// "schreier:1" or "fine:w+1".
Family family_from_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw DomainError("family spec must be schreier:<ord> or fine:<ord>");
  const std::string kind = spec.substr(0, colon);
  const Ordinal alpha = parse_ordinal(spec.substr(colon + 1));
  if (kind == "schreier") return Family::schreier(alpha);
  if (kind == "fine") return Family::fine_schreier(alpha);
  throw DomainError("unknown family kind '" + kind + "'");
}

std::vector<FinSet> parse_blocks(const std::string& text) {
  std::vector<FinSet> out;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ';')) out.push_back(parse_finset(part));
  return out;
}

void print_sets(const std::vector<FinSet>& sets) {
  for (const auto& s : sets) std::cout << (s.empty() ? "{}" : to_string(s)) << '\n';
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schreier families, ordinal indices and Tsirelson-type norms"};
  app.require_subcommand(1);
  int status = 0;

  // ---- ord ----
  auto* ord = app.add_subcommand("ord", "ordinal arithmetic in Cantor normal form");
  ord->require_subcommand(1);
  std::string oa, ob;
  std::uint64_t fs_n = 1;
  for (const char* name : {"cmp", "add", "mul", "nsum"}) {
    auto* sub = ord->add_subcommand(name, std::string(name) + " of two ordinals");
    sub->add_option("a", oa)->required();
    sub->add_option("b", ob)->required();
    sub->callback([&, name = std::string(name)] {
      const Ordinal a = parse_ordinal(oa), b = parse_ordinal(ob);
      if (name == "cmp") {
        const auto c = a <=> b;
        std::cout << (c < 0 ? "<" : c > 0 ? ">" : "=") << '\n';
      } else if (name == "add") {
        std::cout << to_string(add(a, b)) << '\n';
      } else if (name == "mul") {
        std::cout << to_string(mul(a, b)) << '\n';
      } else {
        std::cout << to_string(natural_sum(a, b)) << '\n';
      }
    });
  }
  auto* ord_fs = ord->add_subcommand("fs", "n-th term of the fundamental sequence");
  ord_fs->add_option("lambda", oa)->required();
  ord_fs->add_option("n", fs_n)->required()->check(CLI::PositiveNumber);
  ord_fs->callback([&] { std::cout << to_string(fundamental_seq(parse_ordinal(oa), fs_n)) << '\n'; });
  auto* ord_cls = ord->add_subcommand("classify", "zero, successor or limit");
  ord_cls->add_option("a", oa)->required();
  ord_cls->callback([&] {
    const Classification c = classify(parse_ordinal(oa));
    switch (c.kind) {
      case OrdinalKind::zero: std::cout << "zero\n"; break;
      case OrdinalKind::successor: std::cout << "successor " << to_string(*c.predecessor) << '\n'; break;
      case OrdinalKind::limit: std::cout << "limit\n"; break;
    }
  });

  // ---- family ----
  auto* fam = app.add_subcommand("family", "queries on families of finite sets");
  fam->require_subcommand(1);
  FamilyFlags ff;
  std::string set_text, blocks_text;
  Index bound = 10;
  bool maximal_only = false;
  std::size_t budget = 32;
  auto member = fam->add_subcommand("member", "is the set a member");
  auto maximal = fam->add_subcommand("maximal", "is the member maximal");
  auto enumerate_cmd = fam->add_subcommand("enumerate", "members inside [1..bound]");
  auto admissible = fam->add_subcommand("admissible", "are the blocks admissible");
  auto structure = fam->add_subcommand("structure", "hereditary, spreading and compactness probes");
  auto cb = fam->add_subcommand("cb-index", "Cantor-Bendixson index by iterated derivatives");
  for (auto* sub : {member, maximal, enumerate_cmd, admissible, structure, cb}) ff.attach(sub);
  member->add_option("--set", set_text, "e.g. 3,5,9; - for the empty set")->required();
  maximal->add_option("--set", set_text)->required();
  enumerate_cmd->add_option("--bound", bound)->check(CLI::PositiveNumber);
  enumerate_cmd->add_flag("--maximal", maximal_only, "maximal members only");
  admissible->add_option("--blocks", blocks_text, "blocks separated by ';', e.g. 2,3;5;7,8")->required();
  structure->add_option("--bound", bound)->check(CLI::Range(1, 20));
  cb->add_option("--budget", budget)->check(CLI::PositiveNumber);
  member->callback([&] { std::cout << yes_no(ff.get().contains(parse_finset(set_text))) << '\n'; });
  maximal->callback([&] { std::cout << yes_no(is_maximal(ff.get(), parse_finset(set_text))) << '\n'; });
  enumerate_cmd->callback([&] {
    EnumerateOptions opts;
    opts.bound = bound;
    opts.maximal_only = maximal_only;
    print_sets(enumerate(ff.get(), opts));
  });
  admissible->callback([&] { std::cout << yes_no(is_admissible(ff.get(), parse_blocks(blocks_text))) << '\n'; });
  structure->callback([&] {
    const StructureReport r = check_structure(ff.get(), bound);
    std::cout << "hereditary " << yes_no(r.hereditary) << "\nspreading " << yes_no(r.spreading)
              << "\ncompact_no_chain " << yes_no(r.compact_no_chain) << '\n';
  });
  cb->callback([&] {
    const CbIndexResult r = cb_index_finite(ff.get(), budget);
    if (r.index)
      std::cout << *r.index << '\n';
    else
      throw BudgetExceeded("Cantor-Bendixson index is at least " + std::to_string(r.budget));
  });

  // ---- norm / dualnorm ----
  std::string c_text = "1/2", vec_text, cert_file, cache_dir;
  std::size_t depth = 0;
  auto* norm_cmd = app.add_subcommand("norm", "exact Tsirelson-type norm of a finitely supported vector");
  ff.attach(norm_cmd);
  norm_cmd->add_option("--c", c_text, "damping constant in (0,1)");
  norm_cmd->add_option("--vec", vec_text, "e.g. 3:1,4:1,5:-2/3")->required();
  norm_cmd->add_option("--cert", cert_file, "write the partition certificate as JSON");
  norm_cmd->add_option("--cache-dir", cache_dir, "persistent value cache (default $SCHREIER_CACHE_DIR)");
  norm_cmd->callback([&] {
    const NormParams p = NormParams::make(ff.get(), parse_rational(c_text));
    const SparseVec x = parse_sparse_vec(vec_text);
    std::optional<std::filesystem::path> dir = cache_dir.empty() ? NormCache::env_dir() : std::filesystem::path(cache_dir);
    if (dir && cert_file.empty()) {
      NormCache cache(*dir);
      std::cout << to_string(cache.value(p, x)) << '\n';
      return;
    }
    const NormResult r = norm(p, x);
    std::cout << to_string(r.value) << '\n';
    if (!cert_file.empty()) {
      std::ofstream out(cert_file);
      out << cert_to_json(r.cert).dump(2) << '\n';
    }
  });
  auto* dual_cmd = app.add_subcommand("dualnorm", "gauge of the generated norming functionals");
  ff.attach(dual_cmd);
  dual_cmd->add_option("--c", c_text);
  dual_cmd->add_option("--vec", vec_text, "the functional g")->required();
  dual_cmd->add_option("--bound", bound)->check(CLI::PositiveNumber);
  dual_cmd->add_option("--depth", depth, "generation depth (default: bound)");
  dual_cmd->callback([&] {
    const NormParams p = NormParams::make(ff.get(), parse_rational(c_text));
    const DualNormResult r = dual_norm(p, parse_sparse_vec(vec_text), bound, depth ? depth : bound);
    std::cout << to_string(r.value) << "\nwitness " << to_string(r.dual_witness) << '\n';
  });

  // ---- dominate / equiv-sample ----
  std::string u_spec = "schreier:2", v_spec = "schreier:1", uc = "1/2", vc = "1/2";
  std::size_t search_budget = 10000, samples = 100;
  std::uint64_t seed = 1, n_power = 2;
  std::string alpha_text = "1";
  auto* dom = app.add_subcommand("dominate", "lower bound for the domination constant of U over V");
  dom->add_option("--u", u_spec, "family of U, e.g. schreier:2");
  dom->add_option("--v", v_spec, "family of V");
  dom->add_option("--uc", uc);
  dom->add_option("--vc", vc);
  dom->add_option("--bound", bound)->check(CLI::PositiveNumber);
  dom->add_option("--budget", search_budget)->check(CLI::PositiveNumber);
  dom->callback([&] {
    const DominationResult r = domination_search(NormParams::make(family_from_spec(u_spec), parse_rational(uc)),
                                                 NormParams::make(family_from_spec(v_spec), parse_rational(vc)), bound,
                                                 search_budget);
    std::cout << "C_lb " << to_string(r.lower_bound) << "\nwitness " << to_string(r.witness) << "\nevaluations "
              << r.evaluations << '\n';
  });
  auto* eq = app.add_subcommand("equiv-sample", "ratios of T_{alpha*n} to T_{alpha,c}, c ~ 2^{-1/n}");
  eq->add_option("--alpha", alpha_text);
  eq->add_option("--n", n_power)->check(CLI::PositiveNumber);
  eq->add_option("--bound", bound)->check(CLI::PositiveNumber);
  eq->add_option("--samples", samples);
  eq->add_option("--seed", seed);
  eq->callback([&] {
    const EquivalenceReport r = equivalence_sample(parse_ordinal(alpha_text), n_power, bound, samples, seed);
    std::cout << "c " << to_string(r.c) << "\nsamples " << r.samples << '\n';
    if (r.max_ratio_up) {
      std::cout << "max_ratio_up " << to_string(*r.max_ratio_up) << " at " << to_string(r.witness_up->x) << '\n';
      std::cout << "max_ratio_down " << to_string(*r.max_ratio_down) << " at " << to_string(r.witness_down->x) << '\n';
    }
  });

  // ---- indices ----
  auto* idx = app.add_subcommand("indices", "tree orders, block derivatives and compressions");
  idx->require_subcommand(1);
  std::string tree_file;
  std::size_t lemma_n = 0;
  auto* order_cmd = idx->add_subcommand("order", "order of an explicit tree {\"sequences\": [...]}");
  auto* derive = idx->add_subcommand("derive", "block derivative of a spreading block tree");
  auto* compress = idx->add_subcommand("compress", "min-sets of a block tree inside [1..bound]");
  auto* lemma = idx->add_subcommand("inclusion", "check (min G)^(2n+2) inside min(G^(n+1))");
  auto* witness = idx->add_subcommand("witness", "check the lift witness of F_alpha against a block tree");
  for (auto* sub : {order_cmd, derive, compress, lemma, witness}) sub->add_option("--tree", tree_file)->required();
  compress->add_option("--bound", bound)->check(CLI::PositiveNumber);
  lemma->add_option("--n", lemma_n);
  lemma->add_option("--bound", bound)->check(CLI::PositiveNumber);
  lemma->add_option("--seed", seed, "unused; accepted for harness symmetry");
  witness->add_option("--alpha", alpha_text);
  witness->add_option("--bound", bound)->check(CLI::PositiveNumber);
  order_cmd->callback([&] { std::cout << order(ExplicitTree::from_json(FamilyFlags::read_json(tree_file))) << '\n'; });
  derive->callback([&] {
    std::cout << block_derivative(BlockTree::from_json(FamilyFlags::read_json(tree_file))).to_json().dump() << '\n';
  });
  compress->callback([&] {
    EnumerateOptions opts;
    opts.bound = bound;
    print_sets(enumerate(compression(BlockTree::from_json(FamilyFlags::read_json(tree_file)), bound), opts));
  });
  lemma->callback([&] {
    const InclusionReport r = inclusion_check(BlockTree::from_json(FamilyFlags::read_json(tree_file)), lemma_n, bound);
    std::cout << (r.holds ? "holds" : "fails") << " lhs=" << r.lhs_size << " rhs=" << r.rhs_size;
    if (r.counterexample) std::cout << " counterexample=" << to_string(*r.counterexample);
    std::cout << '\n';
    if (!r.holds) status = kCheckFailed;
  });
  witness->callback([&] {
    const Ordinal alpha = parse_ordinal(alpha_text);
    const BlockTree target = BlockTree::from_json(FamilyFlags::read_json(tree_file));
    auto successive_blocks = [](const std::vector<FinSet>& seq) { return is_successive(seq); };
    const WitnessReport r = witness_verify(alpha, identity_lift_witness(alpha, bound), target, successive_blocks, bound);
    if (r.ok) {
      std::cout << "ok\n";
    } else {
      std::cout << "fails at " << to_string(*r.failed_at) << ": " << r.reason << '\n';
      status = kCheckFailed;
    }
  });

  // ---- check ----
  auto* check = app.add_subcommand("check", "run a property-check suite");
  std::string suite = "all", format = "text", summary_file;
  unsigned threads = 0;
  bool no_timing = false;
  check->add_option("--suite", suite)->check(CLI::IsMember(suite_names()));
  check->add_option("--seed", seed);
  check->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));
  check->add_option("--summary", summary_file, "also write the JSON summary here");
  check->add_option("--threads", threads);
  check->add_flag("--no-timing", no_timing, "omit elapsed_ms from the JSON summary");
  check->add_option("--cache-dir", cache_dir);
  check->callback([&] {
    SuiteConfig cfg;
    cfg.seed = seed;
    cfg.threads = threads;
    cfg.cache_dir = cache_dir.empty() ? NormCache::env_dir() : std::filesystem::path(cache_dir);
    const SuiteReport r = run_suite(suite, cfg);
    if (format == "json") {
      std::cout << r.to_json(!no_timing).dump(2) << '\n';
    } else if (format == "csv") {
      std::cout << "id,status,anchor,witness\n";
      for (const auto& c : r.checks)
        std::cout << c.id << ',' << (c.passed ? "pass" : "fail") << ",\"" << c.anchor << "\",\"" << c.witness.value_or("")
                  << "\"\n";
    } else {
      std::cout << r.to_text();
      std::size_t failed = 0;
      for (const auto& c : r.checks) failed += !c.passed;
      std::cout << r.checks.size() - failed << " passed, " << failed << " failed (" << r.elapsed_ms << " ms)\n";
    }
    if (!summary_file.empty()) std::ofstream(summary_file) << r.to_json(!no_timing).dump(2) << '\n';
    if (!r.passed()) status = kCheckFailed;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const ParseError& e) {
    std::cerr << "parse error at " << e.position() << ": " << e.what() << '\n';
    return kUsage;
  } catch (const CertificateError& e) {
    std::cerr << e.what() << '\n';
    return kCheckFailed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return status;
}
