// fnlab: command-line front end.
//
// Exit codes
//   0  success / pair valid / pair found
//   1  pair invalid, or no pair at the requested capacities
//   2  usage, parse or input validation error
//   3  size cap or node budget exceeded (output marked inconclusive)
//   4  a transported pair failed verification, or another internal error

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fnlab/coproduct.hpp"
#include "fnlab/exponential.hpp"
#include "fnlab/io.hpp"
#include "fnlab/oracle.hpp"
#include "fnlab/random.hpp"
#include "fnlab/search.hpp"
#include "fnlab/transport.hpp"

using namespace fnlab;
using io::Json;

namespace {

struct Globals {
  std::uint64_t seed = 1;
  std::size_t workers = 1;
  std::optional<std::uint64_t> budget;

  std::uint64_t node_budget() const {
    if (budget) return *budget;
    if (const char* env = std::getenv("FNLAB_NODE_BUDGET")) {
      try {
        return std::stoull(env);
      } catch (const std::logic_error&) {
        throw Error(ErrorCode::BadParams, "FNLAB_NODE_BUDGET is not a number");
      }
    }
    return Limits{}.node_budget;
  }
};

std::filesystem::path dir_of(const std::string& path) {
  return path == "-" ? std::filesystem::current_path() : std::filesystem::path(path).parent_path();
}

Json load(const std::string& path) {
  if (path == "-") {
    std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    return io::parse_json(text);
  }
  return io::read_json_file(path);
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::SizeExceeded:
      return 3;
    case ErrorCode::InternalError:
      return 4;
    default:
      return 2;
  }
}

Json verdict_report(const FnPair& pair, const Verdict& v) {
  Json j = io::verdict_to_json(v);
  const auto cap = pair.capacity();
  j["capacity"] = {cap.a, cap.b};
  return j;
}

FnPair input_pair(const PosetPtr& p, const std::string& kind) {
  if (kind == "trivial") return trivial_pair(p);
  if (kind == "wellorder") {
    std::vector<std::size_t> order(p->size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    auto h = wellorder_map(*p, order);
    return FnPair{p, h, h};
  }
  throw Error(ErrorCode::BadParams, "unknown input pair kind " + kind);
}

int report_transport(const Transported& t) {
  Json j;
  j["pair"] = io::pair_to_json(t.pair);
  j["verdict"] = verdict_report(t.pair, t.verdict);
  emit(j);
  if (!t.verdict.valid) {
    std::cerr << "transported pair failed verification\n";
    return 4;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite laboratory for two-parameter Freese-Nation pairs"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "seed for every random generator")->capture_default_str();
  app.add_option("--workers", g.workers, "parallel feasibility probes in frontier walks")->check(CLI::PositiveNumber);
  app.add_option("--budget", g.budget, "search node budget (default: $FNLAB_NODE_BUDGET or 1e8)");

  // verify
  auto* verify = app.add_subcommand("verify", "check a pair file, print the verdict JSON");
  std::string verify_file;
  bool certificates = false;
  verify->add_option("pair", verify_file, "pair JSON file, - for stdin")->required();
  verify->add_flag("--certificates", certificates, "include interpolant certificates");

  // search
  auto* search = app.add_subcommand("search", "look for a pair with |f(x)| <= a and |g(x)| <= b");
  std::string search_file;
  std::size_t cap_a = 1, cap_b = 1;
  search->add_option("poset", search_file, "poset or algebra JSON file")->required();
  search->add_option("-a", cap_a, "capacity of f")->required();
  search->add_option("-b", cap_b, "capacity of g")->required();

  // frontier
  auto* front = app.add_subcommand("frontier", "Pareto frontier of feasible capacities as CSV");
  std::string frontier_file;
  front->add_option("poset", frontier_file, "poset or algebra JSON file")->required();

  // construct
  auto* construct = app.add_subcommand("construct", "build an algebra file");
  std::string kind;
  std::size_t n = 0, lam = 0, kap = 0;
  unsigned atoms = 0;
  std::vector<unsigned> cofactors;
  std::vector<Mask> gens;
  construct->add_option("kind", kind, "powerset|interval|tree|coproduct|exponential|subalgebra")
      ->required()
      ->check(CLI::IsMember({"powerset", "interval", "tree", "coproduct", "exponential", "subalgebra"}));
  construct->add_option("--n", n, "interval: size of the underlying linear order");
  construct->add_option("--lam", lam, "tree: branching");
  construct->add_option("--kap", kap, "tree: sequences have length < kap");
  construct->add_option("--atoms", atoms, "powerset/exponential/subalgebra: atoms of the base powerset");
  construct->add_option("--cofactors", cofactors, "coproduct: atom counts of the cofactors")->delimiter(',');
  construct->add_option("--gens", gens, "subalgebra: generator masks")->delimiter(',');

  // transport
  auto* transport = app.add_subcommand("transport", "push a valid pair through a construction");
  std::string t_kind, t_pair, t_domain, t_input = "trivial";
  std::vector<std::size_t> t_embed, t_retract, t_subset;
  std::vector<unsigned> t_cofactors;
  unsigned t_atoms = 0;
  transport->add_option("kind", t_kind, "retract|subalgebra|coproduct|exponential")
      ->required()
      ->check(CLI::IsMember({"retract", "subalgebra", "coproduct", "exponential"}));
  transport->add_option("--pair", t_pair, "retract/subalgebra: pair file on the big poset Q");
  transport->add_option("--domain", t_domain, "retract: poset file of the retract P");
  transport->add_option("--embed", t_embed, "retract: images of i: P -> Q")->delimiter(',');
  transport->add_option("--retract", t_retract, "retract: images of j: Q -> P")->delimiter(',');
  transport->add_option("--subset", t_subset, "subalgebra: members of the subposet")->delimiter(',');
  transport->add_option("--cofactors", t_cofactors, "coproduct: atom counts of the cofactors")->delimiter(',');
  transport->add_option("--atoms", t_atoms, "exponential: atoms of the base powerset");
  transport->add_option("--input", t_input, "coproduct/exponential input pairs")
      ->check(CLI::IsMember({"trivial", "wellorder"}));

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force reference answers");
  std::string o_what, o_file;
  std::size_t o_a = 1, o_b = 1, o_n = 0;
  oracle_cmd->add_option("what", o_what, "feasible|frontier|count")
      ->required()
      ->check(CLI::IsMember({"feasible", "frontier", "count"}));
  oracle_cmd->add_option("poset", o_file, "poset or algebra JSON file");
  oracle_cmd->add_option("-a", o_a, "capacity of f");
  oracle_cmd->add_option("-b", o_b, "capacity of g");
  oracle_cmd->add_option("--n", o_n, "count: number of elements");

  // gen
  auto* gen = app.add_subcommand("gen", "random posets and valid pairs");
  std::string gen_what;
  std::size_t gen_n = 4;
  gen->add_option("what", gen_what, "poset|pair")->required()->check(CLI::IsMember({"poset", "pair"}));
  gen->add_option("--n", gen_n, "number of elements")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    Limits limits;
    limits.node_budget = g.node_budget();

    if (*verify) {
      const FnPair pair = io::pair_from_json(load(verify_file), dir_of(verify_file), limits);
      const Verdict v = verify_pair(pair, certificates);
      emit(verdict_report(pair, v));
      return v.valid ? 0 : 1;
    }

    if (*search) {
      auto p = share(io::structure_from_json(load(search_file), limits));
      const auto r = run_search(p, {cap_a, cap_b}, limits.node_budget);
      Json j;
      j["capacity"] = {cap_a, cap_b};
      j["nodes"] = r.nodes;
      switch (r.status) {
        case SearchStatus::Found:
          j["status"] = "found";
          j["pair"] = io::pair_to_json(*r.pair);
          emit(j);
          return 0;
        case SearchStatus::Infeasible:
          j["status"] = "infeasible";
          emit(j);
          return 1;
        case SearchStatus::BudgetExceeded:
          j["status"] = "inconclusive";
          emit(j);
          std::cerr << "node budget exhausted\n";
          return 3;
      }
    }

    if (*front) {
      auto p = share(io::structure_from_json(load(frontier_file), limits));
      const auto f = frontier(p, FrontierOptions{limits.node_budget, g.workers});
      std::cout << io::frontier_to_csv(f);
      if (!f.complete) {
        std::cerr << "node budget exhausted; frontier is inconclusive\n";
        return 3;
      }
      return 0;
    }

    if (*construct) {
      io::AlgebraDoc doc;
      doc.kind = kind;
      if (kind == "powerset") {
        doc.params = {{"atoms", atoms}};
        doc.algebra = BooleanAlgebra::powerset(atoms, limits);
      } else if (kind == "interval") {
        auto ia = interval_algebra(n, limits);
        doc.params = {{"n", n}};
        doc.algebra = ia.algebra;
        doc.generators = ia.generators;
      } else if (kind == "tree") {
        auto ta = tree_algebra(lam, kap, limits);
        doc.params = {{"lam", lam}, {"kap", kap}};
        doc.algebra = ta.algebra;
        doc.generators = ta.generators;
      } else if (kind == "coproduct") {
        if (cofactors.empty()) throw Error(ErrorCode::BadParams, "--cofactors is required");
        std::vector<BooleanAlgebra> parts;
        for (auto k : cofactors) parts.push_back(BooleanAlgebra::powerset(k, limits));
        doc.params = {{"cofactors", cofactors}};
        doc.algebra = coproduct(std::move(parts), limits).base();
      } else if (kind == "exponential") {
        doc.params = {{"atoms", atoms}};
        doc.algebra = exponential(BooleanAlgebra::powerset(atoms, limits), limits).algebra();
      } else {
        doc.params = {{"atoms", atoms}, {"gens", gens}};
        doc.algebra = generated_subalgebra(BooleanAlgebra::powerset(atoms, limits), gens, limits);
        doc.generators = gens;
      }
      emit(io::algebra_to_json(doc));
      return 0;
    }

    if (*transport) {
      if (t_kind == "retract") {
        if (t_pair.empty() || t_domain.empty()) throw Error(ErrorCode::BadParams, "--pair and --domain are required");
        const FnPair pq = io::pair_from_json(load(t_pair), dir_of(t_pair), limits);
        auto pp = share(io::structure_from_json(load(t_domain), limits));
        MonotoneMap i{pp, pq.poset, t_embed}, j{pq.poset, pp, t_retract};
        i.check_shape();
        j.check_shape();
        return report_transport(transport_retract(pq, i, j));
      }
      if (t_kind == "subalgebra") {
        if (t_pair.empty()) throw Error(ErrorCode::BadParams, "--pair is required");
        const FnPair pq = io::pair_from_json(load(t_pair), dir_of(t_pair), limits);
        ElementSet members(pq.poset->size());
        for (auto x : t_subset) {
          pq.poset->check_index(x);
          members.insert(x);
        }
        return report_transport(transport_subalgebra(pq, SubsetView{pq.poset, members}));
      }
      if (t_kind == "coproduct") {
        if (t_cofactors.empty()) throw Error(ErrorCode::BadParams, "--cofactors is required");
        std::vector<BooleanAlgebra> parts;
        std::vector<FnPair> pairs;
        for (auto k : t_cofactors) {
          parts.push_back(BooleanAlgebra::powerset(k, limits));
          pairs.push_back(input_pair(share(parts.back().as_poset(limits)), t_input));
        }
        const auto c = coproduct(std::move(parts), limits);
        return report_transport(transport_coproduct(c, pairs, limits));
      }
      const auto e = exponential(BooleanAlgebra::powerset(t_atoms, limits), limits);
      const FnPair pb = input_pair(share(e.base().as_poset(limits)), t_input);
      return report_transport(transport_exponential(e, pb, limits));
    }

    if (*oracle_cmd) {
      if (o_what == "count") {
        std::cout << oracle::for_each_poset(o_n, [](const Poset&) {}) << "\n";
        return 0;
      }
      if (o_file.empty()) throw Error(ErrorCode::BadParams, "a poset file is required");
      const Poset p = io::structure_from_json(load(o_file), limits);
      if (o_what == "feasible") {
        const bool ok = oracle::brute_feasible(p, {o_a, o_b});
        std::cout << (ok ? "true" : "false") << "\n";
        return ok ? 0 : 1;
      }
      Frontier f;
      f.points = oracle::brute_frontier(p);
      std::cout << io::frontier_to_csv(f);
      return 0;
    }

    if (*gen) {
      Rng rng(g.seed);
      auto p = share(random_poset(gen_n, rng));
      if (gen_what == "poset")
        emit(io::poset_to_json(*p));
      else
        emit(io::pair_to_json(random_valid_pair(p, rng)));
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 2;
}
