#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "augur/rational.hpp"
#include "augur/steiner.hpp"

namespace augur {

enum class LpArithmetic { floating, exact };

struct LpOptions {
    std::optional<NodeId> root;   // smallest terminal when unset
    double cut_tolerance = 1e-7;  // a cut counts as violated below 1 - tol
    int max_cuts = 10000;
    LpArithmetic arithmetic = LpArithmetic::floating;
    int component_cap = kComponentCap;
};

inline constexpr std::size_t kExactComponentLimit = 200;

struct CutViolation {
    std::vector<NodeId> cut;  // U: sorted terminals, root excluded
    double lhs = 0;
    NodeId witness = kNoNode;
};

struct DcrLp {
    std::vector<Component> components;
    std::vector<NodeId> terminals;
    NodeId root = kNoNode;
    std::vector<double> x;
    std::optional<std::vector<Rational>> x_exact;
    std::vector<std::vector<NodeId>> cuts;
    double objective = 0;
    std::optional<Rational> objective_exact;
    std::vector<double> objective_trace;  // restricted optimum per round
};

/// Left-hand side of the cut constraint for U: mass of components whose sink
/// lies outside U and which have a source inside U.
double cut_value(const std::vector<Component>& components, const std::vector<double>& x,
                 const std::vector<NodeId>& cut);

/// Max-flow value from terminal t to the root in the auxiliary digraph, and
/// the terminals on the source side of a minimum cut.
double min_cut_from(const std::vector<Component>& components, const std::vector<double>& x,
                    const std::vector<NodeId>& terminals, NodeId root, NodeId t, std::vector<NodeId>* side);

/// Scans terminals t != root in id order and reports the minimum cut of the
/// first one whose flow is below 1 - tol.
std::optional<CutViolation> separate(const std::vector<Component>& components, const std::vector<double>& x,
                                     const std::vector<NodeId>& terminals, NodeId root, double tol = 1e-7);

/// Cutting-plane solve over an explicit component list.
DcrLp solve_lp_over(std::vector<Component> components, std::vector<NodeId> terminals, const LpOptions& options = {});

/// Enumerates components with at most k terminals and solves the k-DCR LP.
/// Throws InfeasibleError when some terminal cannot be reached.
DcrLp solve_lp(const CaInstance& inst, int k, const LpOptions& options = {});

/// Uniform double in [0, 1) from the top 53 bits of one engine draw.
double unit_uniform(std::mt19937_64& rng);

/// Index of a component drawn with probability x_C / sum x. Throws
/// std::invalid_argument when the mass is zero.
std::size_t sample_component(const DcrLp& lp, std::mt19937_64& rng);

std::string lp_to_json(const DcrLp& lp);

}  // namespace augur
