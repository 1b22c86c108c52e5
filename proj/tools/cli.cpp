#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <variant>

#include <CLI11.hpp>

#include "jinf/automorphism.hpp"
#include "jinf/finite_graph.hpp"
#include "jinf/formats.hpp"
#include "jinf/graph.hpp"
#include "jinf/periodic_set.hpp"
#include "jinf/permutation.hpp"
#include "jinf/reconstruction.hpp"
#include "jinf/set_expr.hpp"
#include "jinf/suite.hpp"

namespace jinf {
namespace {

// Usage-level failures detected inside callbacks (bad flag combinations,
// unreadable spec files); mapped to exit code 2 like parser errors.
struct UsageFailure : std::runtime_error {
  explicit UsageFailure(const std::string& msg) : std::runtime_error(msg) {}
};

struct Context {
  std::ostream& out;
  std::ostream& err;
  int exitCode = 0;
};

// Spec-valued flags accept inline JSON or @path to a file.
std::string specArg(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw UsageFailure("cannot read spec file: " + arg.substr(1));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Vertex evalVertex(const std::string& text) {
  return Vertex::fromSet(parseSetExpression(text));
}

AutomorphismOracle oracleArg(const std::string& arg) {
  return oracleFromValue(automorphismFromJson(specArg(arg)));
}

ComputablePermutation permArg(const std::string& arg) {
  return permutationFromJson(specArg(arg));
}

void emitBool(Context& ctx, const std::string& label, bool value) {
  ctx.out << label << ": " << (value ? "true" : "false") << "\n";
  ctx.exitCode = value ? 0 : 1;
}

std::string bitString(const Bits& bits) {
  std::string s;
  s.reserve(bits.size());
  for (bool b : bits) s.push_back(b ? '1' : '0');
  return s;
}

// --- set ---------------------------------------------------------------------

void addSetCommands(CLI::App& app, Context& ctx) {
  auto* set = app.add_subcommand("set", "Evaluate and inspect eventually periodic sets");
  set->require_subcommand(1);

  struct EvalOpts {
    std::string expr;
    std::uint64_t first = 0;
  };
  auto evalOpts = std::make_shared<EvalOpts>();
  auto* eval = set->add_subcommand("eval", "Evaluate an expression to canonical form");
  eval->add_option("--expr", evalOpts->expr, "set expression")->required();
  eval->add_option("--first", evalOpts->first, "also list this many smallest elements");
  eval->callback([evalOpts, &ctx] {
    const PeriodicSet s = parseSetExpression(evalOpts->expr);
    ctx.out << renderSet(s) << "\n";
    if (evalOpts->first > 0) {
      ctx.out << "first:";
      for (std::uint64_t n : s.firstElements(evalOpts->first)) ctx.out << ' ' << n;
      ctx.out << "\n";
    }
  });

  auto canonExpr = std::make_shared<std::string>();
  auto* canon = set->add_subcommand("canon", "Show the canonical prefix/period split");
  canon->add_option("--expr", *canonExpr, "set expression")->required();
  canon->callback([canonExpr, &ctx] {
    const PeriodicSet s = parseSetExpression(*canonExpr);
    ctx.out << "text: " << renderSet(s) << "\n"
            << "prefix: " << bitString(s.prefixBits()) << "\n"
            << "period: " << bitString(s.periodBits()) << "\n";
  });

  auto classifyExpr = std::make_shared<std::string>();
  auto* classify = set->add_subcommand("classify", "Classify as finite, cofinite, or balanced");
  classify->add_option("--expr", *classifyExpr, "set expression")->required();
  classify->callback([classifyExpr, &ctx] {
    const OrbitType orbit = classifyOrbit(parseSetExpression(*classifyExpr));
    switch (orbit.kind) {
      case OrbitType::Kind::FiniteOfSize:
        ctx.out << "finite of size " << orbit.size << "\n";
        break;
      case OrbitType::Kind::CofiniteOfCodim:
        ctx.out << "cofinite of codimension " << orbit.size << "\n";
        break;
      case OrbitType::Kind::Balanced:
        ctx.out << "balanced\n";
        break;
    }
  });

  struct MemberOpts {
    std::string expr;
    std::uint64_t n = 0;
  };
  auto memberOpts = std::make_shared<MemberOpts>();
  auto* member = set->add_subcommand("member", "Membership test");
  member->add_option("--expr", memberOpts->expr, "set expression")->required();
  member->add_option("--n", memberOpts->n, "point to test")->required();
  member->callback([memberOpts, &ctx] {
    emitBool(ctx, "member", parseSetExpression(memberOpts->expr).member(memberOpts->n));
  });

  auto splitExpr = std::make_shared<std::string>();
  auto* split = set->add_subcommand("split", "Split an infinite set into two infinite halves");
  split->add_option("--expr", *splitExpr, "set expression")->required();
  split->callback([splitExpr, &ctx] {
    const auto [first, second] = splitInfinite(parseSetExpression(*splitExpr));
    ctx.out << "first: " << renderSet(first) << "\n"
            << "second: " << renderSet(second) << "\n";
  });
}

// --- johnson graph ------------------------------------------------------------

void addJohnsonCommands(CLI::App& app, Context& ctx) {
  struct PairOpts {
    std::string x;
    std::string y;
    bool path = false;
  };

  auto adjOpts = std::make_shared<PairOpts>();
  auto* adj = app.add_subcommand("adj", "Adjacency in the infinite Johnson graph");
  adj->add_option("--x", adjOpts->x, "set expression")->required();
  adj->add_option("--y", adjOpts->y, "set expression")->required();
  adj->callback([adjOpts, &ctx] {
    emitBool(ctx, "adjacent",
             adjacentJohnson(evalVertex(adjOpts->x), evalVertex(adjOpts->y)));
  });

  auto distOpts = std::make_shared<PairOpts>();
  auto* dist = app.add_subcommand("dist", "Johnson distance within a component");
  dist->add_option("--x", distOpts->x, "set expression")->required();
  dist->add_option("--y", distOpts->y, "set expression")->required();
  dist->add_flag("--path", distOpts->path, "print a geodesic");
  dist->callback([distOpts, &ctx] {
    const Vertex x = evalVertex(distOpts->x);
    const Vertex y = evalVertex(distOpts->y);
    const std::uint64_t d = distanceJohnson(x, y);
    ctx.out << "distance: " << d << "\n";
    if (distOpts->path) {
      for (const Vertex& v : geodesic(x, y)) ctx.out << "  " << renderSet(v.set()) << "\n";
    }
  });

  auto compOpts = std::make_shared<PairOpts>();
  auto* comp = app.add_subcommand("component", "Same-component test (finite symmetric difference)");
  comp->add_option("--x", compOpts->x, "set expression")->required();
  comp->add_option("--y", compOpts->y, "set expression")->required();
  comp->callback([compOpts, &ctx] {
    emitBool(ctx, "same-component",
             sameComponent(evalVertex(compOpts->x), evalVertex(compOpts->y)));
  });
}

void addCliqueCommands(CLI::App& app, Context& ctx) {
  auto* clique = app.add_subcommand("clique", "Stars, tops, and clique classification");
  clique->require_subcommand(1);

  auto members = std::make_shared<std::vector<std::string>>();
  auto* classify = clique->add_subcommand("classify", "Classify a vertex list as star/top piece");
  classify->add_option("--vertex", *members, "set expression (repeat at least twice)");
  classify->callback([members, &ctx] {
    if (members->size() < 2) throw UsageFailure("clique classify needs at least two --vertex");
    std::vector<Vertex> vs;
    for (const std::string& m : *members) vs.push_back(evalVertex(m));
    const CliqueKind kind = classifyClique(vs);
    if (const auto* star = std::get_if<StarKind>(&kind)) {
      ctx.out << "kind: star\ncenter: " << renderSet(star->center.set()) << "\n";
    } else if (const auto* top = std::get_if<TopKind>(&kind)) {
      ctx.out << "kind: top\ncarrier: " << renderSet(top->carrier.set()) << "\n";
    } else if (const auto* pair = std::get_if<PairAmbiguousKind>(&kind)) {
      ctx.out << "kind: pair\nstar-center: " << renderSet(pair->starCenter.set())
              << "\ntop-carrier: " << renderSet(pair->topCarrier.set()) << "\n";
    } else {
      const auto& bad = std::get<NotCliqueKind>(kind);
      ctx.out << "kind: not-clique\nnon-adjacent pair: " << bad.i << " " << bad.j << "\n";
      ctx.exitCode = 1;
    }
  });

  struct SampleOpts {
    std::string x;
    std::uint64_t count = 3;
    std::vector<std::uint64_t> excluding;
  };
  for (const char* name : {"star", "top"}) {
    auto opts = std::make_shared<SampleOpts>();
    const bool isStar = std::string(name) == "star";
    auto* cmd = clique->add_subcommand(
        name, isStar ? "Sample neighbors inside the star around a vertex"
                     : "Sample neighbors inside the top under a vertex");
    cmd->add_option("--x", opts->x, "set expression")->required();
    cmd->add_option("--count", opts->count, "how many members to list");
    cmd->add_option("--excluding", opts->excluding, "points to skip")->delimiter(',');
    cmd->callback([opts, isStar, &ctx] {
      const Vertex x = evalVertex(opts->x);
      const auto sample = isStar ? starSample(x, opts->count, opts->excluding)
                                 : topSample(x, opts->count, opts->excluding);
      for (const Vertex& v : sample) ctx.out << renderSet(v.set()) << "\n";
    });
  }

  struct IncOpts {
    std::string x;
    std::string y;
  };
  auto incOpts = std::make_shared<IncOpts>();
  auto* inc = clique->add_subcommand("incident", "Containment either way");
  inc->add_option("--x", incOpts->x, "set expression")->required();
  inc->add_option("--y", incOpts->y, "set expression")->required();
  inc->callback([incOpts, &ctx] {
    emitBool(ctx, "incident", incident(evalVertex(incOpts->x), evalVertex(incOpts->y)));
  });
}

void addKneserCommands(CLI::App& app, Context& ctx) {
  auto* kneser = app.add_subcommand("kneser", "The infinite Kneser graph");
  kneser->require_subcommand(1);

  struct PairOpts {
    std::string x;
    std::string y;
    bool path = false;
  };

  auto adjOpts = std::make_shared<PairOpts>();
  auto* adj = kneser->add_subcommand("adj", "Kneser adjacency (disjointness)");
  adj->add_option("--x", adjOpts->x, "set expression")->required();
  adj->add_option("--y", adjOpts->y, "set expression")->required();
  adj->callback([adjOpts, &ctx] {
    emitBool(ctx, "adjacent", adjacentKneser(evalVertex(adjOpts->x), evalVertex(adjOpts->y)));
  });

  auto distOpts = std::make_shared<PairOpts>();
  auto* dist = kneser->add_subcommand("dist", "Kneser distance (diameter 3)");
  dist->add_option("--x", distOpts->x, "set expression")->required();
  dist->add_option("--y", distOpts->y, "set expression")->required();
  dist->add_flag("--path", distOpts->path, "print a shortest path");
  dist->callback([distOpts, &ctx] {
    const KneserPath result = kneserDistance(evalVertex(distOpts->x), evalVertex(distOpts->y));
    ctx.out << "distance: " << result.distance << "\n";
    if (distOpts->path) {
      for (const Vertex& v : result.path) ctx.out << "  " << renderSet(v.set()) << "\n";
    }
  });

  auto witOpts = std::make_shared<PairOpts>();
  auto* wit = kneser->add_subcommand("witness", "A vertex meeting x and disjoint from y");
  wit->add_option("--x", witOpts->x, "set expression")->required();
  wit->add_option("--y", witOpts->y, "set expression")->required();
  wit->callback([witOpts, &ctx] {
    const Vertex z = kneserSeparationWitness(evalVertex(witOpts->x), evalVertex(witOpts->y));
    ctx.out << renderSet(z.set()) << "\n";
  });
}

// --- permutations --------------------------------------------------------------

void addPermCommands(CLI::App& app, Context& ctx) {
  auto* perm = app.add_subcommand("perm", "Finitely described permutations of N");
  perm->require_subcommand(1);

  auto validateSpec = std::make_shared<std::string>();
  auto* validate = perm->add_subcommand("validate", "Validate and normalize a permutation spec");
  validate->add_option("--spec", *validateSpec, "JSON spec or @file")->required();
  validate->callback([validateSpec, &ctx] { ctx.out << permutationToJson(permArg(*validateSpec)) << "\n"; });

  struct ApplyOpts {
    std::string spec;
    std::uint64_t n = 0;
    bool inverse = false;
  };
  auto applyOpts = std::make_shared<ApplyOpts>();
  auto* apply = perm->add_subcommand("apply", "Image of a point");
  apply->add_option("--spec", applyOpts->spec, "JSON spec or @file")->required();
  apply->add_option("--n", applyOpts->n, "point")->required();
  apply->add_flag("--inverse", applyOpts->inverse, "apply the inverse instead");
  apply->callback([applyOpts, &ctx] {
    const ComputablePermutation s = permArg(applyOpts->spec);
    ctx.out << (applyOpts->inverse ? s.applyInverse(applyOpts->n) : s.apply(applyOpts->n))
            << "\n";
  });

  auto invertSpec = std::make_shared<std::string>();
  auto* invert = perm->add_subcommand("invert", "Spec of the inverse permutation");
  invert->add_option("--spec", *invertSpec, "JSON spec or @file")->required();
  invert->callback([invertSpec, &ctx] {
    ctx.out << permutationToJson(permArg(*invertSpec).inverse()) << "\n";
  });

  struct ComposeOpts {
    std::string outer;
    std::string inner;
  };
  auto composeOpts = std::make_shared<ComposeOpts>();
  auto* comp = perm->add_subcommand("compose", "Spec of outer after inner");
  comp->add_option("--outer", composeOpts->outer, "JSON spec or @file")->required();
  comp->add_option("--inner", composeOpts->inner, "JSON spec or @file")->required();
  comp->callback([composeOpts, &ctx] {
    ctx.out << permutationToJson(compose(permArg(composeOpts->outer), permArg(composeOpts->inner)))
            << "\n";
  });

  struct PushOpts {
    std::string spec;
    std::string set;
  };
  auto pushOpts = std::make_shared<PushOpts>();
  auto* push = perm->add_subcommand("push", "Exact image of a set");
  push->add_option("--spec", pushOpts->spec, "JSON spec or @file")->required();
  push->add_option("--set", pushOpts->set, "set expression")->required();
  push->callback([pushOpts, &ctx] {
    ctx.out << renderSet(pushforward(permArg(pushOpts->spec), parseSetExpression(pushOpts->set)))
            << "\n";
  });

  auto randomConfig = std::make_shared<RandomPermutationConfig>();
  auto* random = perm->add_subcommand("random", "Seeded random permutation spec");
  random->add_option("--seed", randomConfig->seed, "RNG seed");
  random->add_option("--max-modulus", randomConfig->maxModulus, "largest residue modulus");
  random->add_option("--max-offset", randomConfig->maxOffset, "largest residue jump in periods");
  random->add_option("--max-patch", randomConfig->maxPatch, "extra bottom swaps");
  random->callback([randomConfig, &ctx] {
    ctx.out << permutationToJson(randomPermutation(*randomConfig)) << "\n";
  });
}

// --- automorphisms ---------------------------------------------------------------

void addAutoCommands(CLI::App& app, Context& ctx) {
  auto* autoCmd = app.add_subcommand("auto", "Apply and reconstruct graph automorphisms");
  autoCmd->require_subcommand(1);

  struct ApplyOpts {
    std::string spec;
    std::string x;
  };
  auto applyOpts = std::make_shared<ApplyOpts>();
  auto* apply = autoCmd->add_subcommand("apply", "Image of a vertex");
  apply->add_option("--spec", applyOpts->spec, "automorphism JSON or @file")->required();
  apply->add_option("--x", applyOpts->x, "set expression")->required();
  apply->callback([applyOpts, &ctx] {
    ctx.out << renderSet(oracleArg(applyOpts->spec)(evalVertex(applyOpts->x)).set()) << "\n";
  });

  struct ClassifyOpts {
    std::string spec;
    std::string base;
  };
  auto classifyOpts = std::make_shared<ClassifyOpts>();
  auto* classify = autoCmd->add_subcommand("classify", "Star-image case on one component");
  classify->add_option("--spec", classifyOpts->spec, "automorphism JSON or @file")->required();
  classify->add_option("--base", classifyOpts->base, "base vertex expression")->required();
  classify->callback([classifyOpts, &ctx] {
    ctx.out << "case: " << classifyCase(oracleArg(classifyOpts->spec), evalVertex(classifyOpts->base))
            << "\n";
  });

  struct ReconOpts {
    std::string spec;
    std::string base;
    std::uint64_t window = 16;
    std::vector<std::string> verify;
    bool exactify = false;
  };
  auto reconOpts = std::make_shared<ReconOpts>();
  auto* recon = autoCmd->add_subcommand("reconstruct", "Recover the inducing point permutation");
  recon->add_option("--spec", reconOpts->spec, "automorphism JSON or @file")->required();
  recon->add_option("--base", reconOpts->base, "base vertex expression")->required();
  recon->add_option("--window", reconOpts->window, "how many sigma values to print");
  recon->add_option("--verify", reconOpts->verify, "sample vertex to check the restriction on");
  recon->add_flag("--exactify", reconOpts->exactify, "search for a closed-form spec");
  recon->callback([reconOpts, &ctx] {
    const AutomorphismOracle f = oracleArg(reconOpts->spec);
    const ComponentReconstruction result =
        reconstructComponentMap(f, evalVertex(reconOpts->base));
    ctx.out << "case: " << result.tag << "\n"
            << "flip: " << (result.flip ? "true" : "false") << "\n";
    for (std::uint64_t n = 1; n <= reconOpts->window; ++n) {
      ctx.out << "sigma(" << n << ") = " << result.sigma.apply(n) << "\n";
    }
    if (!reconOpts->verify.empty()) {
      std::vector<Vertex> samples;
      for (const std::string& s : reconOpts->verify) samples.push_back(evalVertex(s));
      const RestrictionReport report =
          verifyRestriction(f, result.sigma, result.flip, samples);
      for (const auto& entry : report.entries) {
        ctx.out << (entry.ok ? "ok " : "mismatch ") << renderSet(entry.sample.set());
        if (!entry.detail.empty()) ctx.out << ": " << entry.detail;
        ctx.out << "\n";
      }
      if (!report.allOk()) ctx.exitCode = 1;
    }
    if (reconOpts->exactify) {
      if (const auto spec = exactifyPermutation(result.sigma, ExactifySearch{})) {
        ctx.out << "closed form: " << permutationToJson(*spec) << "\n";
      } else {
        ctx.out << "closed form: none within search bounds\n";
      }
    }
  });

  struct ExampleOpts {
    std::string a;
    std::string b;
  };
  auto exampleOpts = std::make_shared<ExampleOpts>();
  auto* example = autoCmd->add_subcommand(
      "example1", "Non-regular automorphism relabeling one component");
  example->add_option("--a", exampleOpts->a, "set expression")->required();
  example->add_option("--b", exampleOpts->b, "set expression, same component as --a")->required();
  example->callback([exampleOpts, &ctx] {
    const ExampleOneResult result =
        buildExampleOne(evalVertex(exampleOpts->a), evalVertex(exampleOpts->b));
    ctx.out << "f: " << automorphismToJson(AutomorphismValue{result.f}) << "\n"
            << "certificate: " << certificateToJson(result.certificate) << "\n";
  });

  struct VerifyCertOpts {
    std::string spec;
    std::string cert;
  };
  auto certOpts = std::make_shared<VerifyCertOpts>();
  auto* verifyCert = autoCmd->add_subcommand("verify-cert", "Check a non-regularity certificate");
  verifyCert->add_option("--spec", certOpts->spec, "automorphism JSON or @file")->required();
  verifyCert->add_option("--cert", certOpts->cert, "certificate JSON or @file")->required();
  verifyCert->callback([certOpts, &ctx] {
    emitBool(ctx, "certificate",
             verifyCertificate(oracleArg(certOpts->spec), certificateFromJson(specArg(certOpts->cert))));
  });
}

// --- order-theoretic checks -----------------------------------------------------

void addOrderCommands(CLI::App& app, Context& ctx) {
  auto* order = app.add_subcommand("order", "Containment-based probes and reconstruction");
  order->require_subcommand(1);

  struct CheckOpts {
    std::string spec;
    std::vector<std::string> xs;
    std::vector<std::string> ys;
  };
  auto checkOpts = std::make_shared<CheckOpts>();
  auto* check = order->add_subcommand("check", "Containment preserved on sample pairs");
  check->add_option("--spec", checkOpts->spec, "automorphism JSON or @file")->required();
  check->add_option("--x", checkOpts->xs, "left element of a pair (repeatable)")->required();
  check->add_option("--y", checkOpts->ys, "right element of a pair (repeatable)")->required();
  check->callback([checkOpts, &ctx] {
    if (checkOpts->xs.size() != checkOpts->ys.size()) {
      throw UsageFailure("order check needs matching --x and --y counts");
    }
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (std::size_t i = 0; i < checkOpts->xs.size(); ++i) {
      pairs.emplace_back(evalVertex(checkOpts->xs[i]), evalVertex(checkOpts->ys[i]));
    }
    const OrderCheckVerdict verdict =
        checkOrderPreservingOnSamples(oracleArg(checkOpts->spec), pairs);
    emitBool(ctx, "order-preserving", verdict.allPass);
    if (verdict.witness) {
      ctx.out << "witness: " << renderSet(verdict.witness->first.set()) << " vs "
              << renderSet(verdict.witness->second.set()) << "\n";
    }
  });

  struct MeetOpts {
    std::string spec;
    std::vector<std::string> members;
  };
  auto meetOpts = std::make_shared<MeetOpts>();
  auto* meet = order->add_subcommand("meet", "Image of the intersection vs intersection of images");
  meet->add_option("--spec", meetOpts->spec, "automorphism JSON or @file")->required();
  meet->add_option("--x", meetOpts->members, "family member (repeatable)")->required();
  meet->callback([meetOpts, &ctx] {
    std::vector<Vertex> family;
    for (const std::string& m : meetOpts->members) family.push_back(evalVertex(m));
    emitBool(ctx, "preserved", checkIntersectionPreservation(oracleArg(meetOpts->spec), family));
  });

  struct CoverOpts {
    std::string spec;
    std::string upper;
    std::string lower;
  };
  auto coverOpts = std::make_shared<CoverOpts>();
  auto* cover = order->add_subcommand("cover", "Covering pair mapped to a covering pair");
  cover->add_option("--spec", coverOpts->spec, "automorphism JSON or @file")->required();
  cover->add_option("--upper", coverOpts->upper, "the larger vertex")->required();
  cover->add_option("--lower", coverOpts->lower, "the vertex one element below")->required();
  cover->callback([coverOpts, &ctx] {
    emitBool(ctx, "preserved",
             checkCoveringPreservation(oracleArg(coverOpts->spec), evalVertex(coverOpts->upper),
                                       evalVertex(coverOpts->lower)));
  });

  struct SigmaOpts {
    std::string spec;
    std::uint64_t n = 0;
  };
  auto sigmaOpts = std::make_shared<SigmaOpts>();
  auto* sigma = order->add_subcommand("sigma", "One point image via the meet probe");
  sigma->add_option("--spec", sigmaOpts->spec, "automorphism JSON or @file")->required();
  sigma->add_option("--n", sigmaOpts->n, "point")->required();
  sigma->callback([sigmaOpts, &ctx] {
    ctx.out << orderSigma(oracleArg(sigmaOpts->spec), sigmaOpts->n) << "\n";
  });

  struct ReconOpts {
    std::string spec;
    std::uint64_t window = 16;
    std::uint64_t count = 0;
    bool exactify = false;
  };
  auto reconOpts = std::make_shared<ReconOpts>();
  auto* recon = order->add_subcommand("reconstruct", "Base-free pointwise reconstruction");
  recon->add_option("--spec", reconOpts->spec, "automorphism JSON or @file")->required();
  recon->add_option("--window", reconOpts->window, "upfront sweep size");
  recon->add_option("--count", reconOpts->count, "how many sigma values to print");
  recon->add_flag("--exactify", reconOpts->exactify, "search for a closed-form spec");
  recon->callback([reconOpts, &ctx] {
    const QueryBackedPermutation sigma =
        reconstructOrderPreserving(oracleArg(reconOpts->spec), reconOpts->window);
    const std::uint64_t count = reconOpts->count > 0 ? reconOpts->count : reconOpts->window;
    for (std::uint64_t n = 1; n <= count; ++n) {
      ctx.out << "sigma(" << n << ") = " << sigma.apply(n) << "\n";
    }
    if (reconOpts->exactify) {
      if (const auto spec = exactifyPermutation(sigma, ExactifySearch{})) {
        ctx.out << "closed form: " << permutationToJson(*spec) << "\n";
      } else {
        ctx.out << "closed form: none within search bounds\n";
      }
    }
  });
}

// --- finite oracles ---------------------------------------------------------------

struct FamilyOpts {
  std::string family = "johnson";
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::string center;
  std::uint64_t window = 0;
  std::uint64_t radius = 0;
};

void addFamilyOptions(CLI::App* cmd, FamilyOpts& opts) {
  cmd->add_option("--family", opts.family, "johnson, kneser, or truncated")
      ->check(CLI::IsMember({"johnson", "kneser", "truncated"}));
  cmd->add_option("--n", opts.n, "ground set size");
  cmd->add_option("--k", opts.k, "subset size");
  cmd->add_option("--center", opts.center, "center vertex expression (truncated)");
  cmd->add_option("--window", opts.window, "window size (truncated)");
  cmd->add_option("--radius", opts.radius, "truncation radius (truncated)");
}

FiniteGraph buildFamily(const FamilyOpts& opts) {
  if (opts.family == "johnson") return buildJohnsonFinite(opts.n, opts.k);
  if (opts.family == "kneser") return buildKneserFinite(opts.n, opts.k);
  if (opts.center.empty()) throw UsageFailure("truncated family needs --center");
  return buildTruncatedComponent(evalVertex(opts.center), opts.window, opts.radius);
}

void printGraphSummary(Context& ctx, const FiniteGraph& g, bool adjacency) {
  ctx.out << "vertices: " << g.size() << "\n";
  if (g.boundaryWarning) {
    ctx.out << "warning: n = 2k, complementation induces the same graph\n";
  }
  if (adjacency) ctx.out << renderAdjacencyText(g);
}

void addOracleCommands(CLI::App& app, Context& ctx) {
  auto* oracle = app.add_subcommand("oracle", "Finite ground-truth graphs");
  oracle->require_subcommand(1);

  struct BuildOpts {
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    bool adjacency = false;
  };
  for (const char* name : {"johnson", "kneser"}) {
    auto opts = std::make_shared<BuildOpts>();
    const bool johnson = std::string(name) == "johnson";
    auto* cmd = oracle->add_subcommand(
        name, johnson ? "Finite Johnson graph on k-subsets of an n-set"
                      : "Finite Kneser graph on k-subsets of an n-set");
    cmd->add_option("--n", opts->n, "ground set size")->required();
    cmd->add_option("--k", opts->k, "subset size")->required();
    cmd->add_flag("--adjacency", opts->adjacency, "print adjacency lists");
    cmd->callback([opts, johnson, &ctx] {
      printGraphSummary(ctx, johnson ? buildJohnsonFinite(opts->n, opts->k)
                                     : buildKneserFinite(opts->n, opts->k),
                        opts->adjacency);
    });
  }

  struct TruncOpts {
    std::string center;
    std::uint64_t window = 0;
    std::uint64_t radius = 0;
    bool adjacency = false;
  };
  auto truncOpts = std::make_shared<TruncOpts>();
  auto* trunc = oracle->add_subcommand("truncate", "Ball of a component, truncated to a window");
  trunc->add_option("--center", truncOpts->center, "center vertex expression")->required();
  trunc->add_option("--window", truncOpts->window, "points 1..window vary")->required();
  trunc->add_option("--radius", truncOpts->radius, "ball radius")->required();
  trunc->add_flag("--adjacency", truncOpts->adjacency, "print adjacency lists");
  trunc->callback([truncOpts, &ctx] {
    printGraphSummary(
        ctx, buildTruncatedComponent(evalVertex(truncOpts->center), truncOpts->window, truncOpts->radius),
        truncOpts->adjacency);
  });

  struct BfsOpts {
    FamilyOpts family;
    std::vector<std::uint64_t> from;
    std::vector<std::uint64_t> to;
  };
  auto bfsOpts = std::make_shared<BfsOpts>();
  auto* bfs = oracle->add_subcommand("bfs", "BFS distance between two labeled vertices");
  addFamilyOptions(bfs, bfsOpts->family);
  bfs->add_option("--from", bfsOpts->from, "source label, comma separated points")
      ->delimiter(',')
      ->required();
  bfs->add_option("--to", bfsOpts->to, "target label, comma separated points")
      ->delimiter(',')
      ->required();
  bfs->callback([bfsOpts, &ctx] {
    const FiniteGraph g = buildFamily(bfsOpts->family);
    auto indexOrThrow = [&g](std::vector<std::uint64_t> label) {
      std::sort(label.begin(), label.end());
      const auto idx = g.indexOf(label);
      if (!idx) {
        std::string text;
        for (std::uint64_t p : label) text += (text.empty() ? "" : ",") + std::to_string(p);
        throw UnknownVertex(text);
      }
      return *idx;
    };
    const auto d = bfsDistance(g, indexOrThrow(bfsOpts->from), indexOrThrow(bfsOpts->to));
    if (d) {
      ctx.out << "distance: " << *d << "\n";
    } else {
      ctx.out << "unreachable\n";
      ctx.exitCode = 1;
    }
  });

  struct AutOrderOpts {
    FamilyOpts family;
    std::uint64_t budget = 40;
  };
  auto autOpts = std::make_shared<AutOrderOpts>();
  auto* autOrder = oracle->add_subcommand("aut-order", "Order of the automorphism group");
  addFamilyOptions(autOrder, autOpts->family);
  autOrder->add_option("--budget", autOpts->budget, "largest vertex count attempted");
  autOrder->callback([autOpts, &ctx] {
    ctx.out << autGroupOrder(buildFamily(autOpts->family), autOpts->budget) << "\n";
  });

  struct CliquesOpts {
    std::uint64_t n = 0;
    std::uint64_t k = 0;
  };
  auto cliquesOpts = std::make_shared<CliquesOpts>();
  auto* cliques = oracle->add_subcommand("cliques", "Maximal cliques of a finite Johnson graph");
  cliques->add_option("--n", cliquesOpts->n, "ground set size")->required();
  cliques->add_option("--k", cliquesOpts->k, "subset size")->required();
  cliques->callback([cliquesOpts, &ctx] {
    const FiniteGraph g = buildJohnsonFinite(cliquesOpts->n, cliquesOpts->k);
    std::size_t stars = 0;
    std::size_t tops = 0;
    for (const MaximalClique& clique : maximalCliques(g)) {
      stars += clique.isStar ? 1 : 0;
      tops += clique.isTop ? 1 : 0;
      ctx.out << (clique.isStar ? "star" : (clique.isTop ? "top" : "clique")) << " size "
              << clique.members.size() << ":";
      for (std::size_t v : clique.members) ctx.out << ' ' << g.labelText(v);
      ctx.out << "\n";
    }
    ctx.out << "stars: " << stars << "\ntops: " << tops << "\n";
  });

  struct InducedOpts {
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    std::vector<std::uint64_t> map;
    bool complement = false;
  };
  auto inducedOpts = std::make_shared<InducedOpts>();
  auto* induced = oracle->add_subcommand(
      "induced-perm", "Recover a point permutation from its action on k-subsets");
  induced->add_option("--n", inducedOpts->n, "ground set size")->required();
  induced->add_option("--k", inducedOpts->k, "subset size")->required();
  induced->add_option("--map", inducedOpts->map, "images of 1..n, comma separated")
      ->delimiter(',')
      ->required();
  induced->add_flag("--complement", inducedOpts->complement,
                    "complement every image subset (needs n = 2k)");
  induced->callback([inducedOpts, &ctx] {
    const FiniteGraph g = buildJohnsonFinite(inducedOpts->n, inducedOpts->k);
    const auto vertexMap = applyPointMapToVertices(g, inducedOpts->map, inducedOpts->complement);
    const InducedPointMap recovered = inducedPermutationFinite(g, vertexMap);
    ctx.out << "images:";
    for (std::uint64_t q : recovered.images) ctx.out << ' ' << q;
    ctx.out << "\ncomplement: " << (recovered.usedComplement ? "true" : "false") << "\n";
  });
}

// --- suite -------------------------------------------------------------------------

void addSuiteCommands(CLI::App& app, Context& ctx) {
  auto* suite = app.add_subcommand("suite", "End-to-end verification checks");
  suite->require_subcommand(1);

  struct RunOpts {
    SuiteConfig config;
    bool json = false;
    std::string outPath;
  };
  auto runOpts = std::make_shared<RunOpts>();
  auto* run = suite->add_subcommand("run", "Run the named checks");
  run->add_option("--seed", runOpts->config.seed, "base RNG seed");
  run->add_option("--filter", runOpts->config.filter, "substring match on check names");
  run->add_flag("--mutant", runOpts->config.includeMutant,
                "also run the self-test that corrupts an oracle");
  run->add_flag("--json", runOpts->json, "machine-readable report");
  run->add_option("--out", runOpts->outPath, "also write the report to this file");
  run->callback([runOpts, &ctx] {
    const SuiteReport report = runSuite(runOpts->config);
    if (report.checks.empty()) {
      throw UsageFailure("no checks match filter \"" + runOpts->config.filter + "\"");
    }
    const std::string rendered =
        runOpts->json ? renderReportJson(report) + "\n" : renderReportText(report);
    ctx.out << rendered;
    if (!runOpts->outPath.empty()) {
      std::ofstream file(runOpts->outPath);
      if (!file) throw UsageFailure("cannot write report to " + runOpts->outPath);
      file << rendered;
    }
    ctx.exitCode = report.allPassed() ? 0 : 1;
  });

  auto listMutant = std::make_shared<bool>(false);
  auto* list = suite->add_subcommand("list", "List check names");
  list->add_flag("--mutant", *listMutant, "include the oracle-corruption self-test");
  list->callback([listMutant, &ctx] {
    for (const std::string& name : suiteCheckNames(*listMutant)) ctx.out << name << "\n";
  });
}

const char* kGrammarFooter =
    "set expression grammar:\n"
    "  expr := evens | odds | {1,2,3} | mod(m,r) | per(prefix;period)\n"
    "        | complement(e) | union(e,e) | inter(e,e) | diff(e,e) | symdiff(e,e)\n"
    "  per() takes 0/1 strings; mod(m,r) is {n : n = r mod m} with 0 <= r < m.\n"
    "Permutation, automorphism, and certificate specs are JSON; pass them\n"
    "inline or as @path to read a file.";

}  // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations on the infinite Johnson and Kneser graphs"};
  app.name("jinf");
  app.footer(kGrammarFooter);
  app.require_subcommand(1);

  Context ctx{out, err};
  addSetCommands(app, ctx);
  addJohnsonCommands(app, ctx);
  addCliqueCommands(app, ctx);
  addKneserCommands(app, ctx);
  addPermCommands(app, ctx);
  addAutoCommands(app, ctx);
  addOrderCommands(app, ctx);
  addOracleCommands(app, ctx);
  addSuiteCommands(app, ctx);

  std::vector<std::string> argv = args;
  try {
    // CLI11 consumes the vector back to front.
    std::reverse(argv.begin(), argv.end());
    app.parse(argv);
    return ctx.exitCode;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  } catch (const UsageFailure& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const BadParameters& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace jinf
