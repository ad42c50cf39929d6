#pragma once

#include <chrono>
#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "topopush/geometry.hpp"
#include "topopush/plan.hpp"
#include "topopush/push_sim.hpp"
#include "topopush/random.hpp"

namespace topopush {

/// Number of in-region obstacles, and their component count at radius r.
std::size_t region_obstacle_count(const Configuration& config, const Workspace& ws);
std::size_t region_component_count(const Configuration& config, const Workspace& ws, double r);

/// Reward of the push that turned `parent` into `child`:
/// b + t * m with b = obstacles removed from the path region,
/// m = max(new components at r_used, 0) and t = [b > 0].
double reward(const Configuration& parent, const Configuration& child, const Workspace& ws,
              double r_used);

/// The same formula on precomputed region counts.
double reward_from_counts(std::size_t region_parent, std::size_t region_child, std::size_t components_parent,
                          std::size_t components_child);

/// Upper confidence bound: mean + c * sqrt(2 ln(parent_visits) / child_visits).
double ucb(std::size_t parent_visits, std::size_t child_visits, double child_cum_reward, double c);

enum class NodeStatus { Open, TerminalSuccess, Failure };

struct SearchNode {
  Configuration config;  ///< empty for failure nodes
  PushAction action;     ///< edge from the parent
  SearchNode* parent = nullptr;
  std::size_t depth = 0;
  std::size_t visits = 0;
  double cumulative_reward = 0.0;
  double edge_reward = 0.0;
  NodeStatus status = NodeStatus::Open;
  /// No further expansion is possible anywhere below this node.
  bool exhausted = false;

  bool actions_ready = false;
  std::vector<PushAction> actions;
  std::vector<std::unique_ptr<SearchNode>> children;  ///< parallel to actions; null = unexpanded
  std::vector<std::size_t> unexpanded;

  double mean_reward() const { return visits ? cumulative_reward / static_cast<double>(visits) : 0.0; }
};

/// Child index picked during descent: the non-failure, non-exhausted child
/// with the highest ucb, earliest action on ties. nullopt if none qualifies.
std::optional<std::size_t> select_child(const SearchNode& node, double c);

/// Fewest actions, then highest summed edge reward, then lexicographic
/// action order. Returns success == false with a greedy best-mean prefix
/// when the tree holds no terminal success.
Plan extract_best_path(const SearchNode& root);

/// Monte-Carlo tree search over push configurations. Each iteration descends
/// by ucb, expands one random untried action with an exact simulated push,
/// scores it with `reward` and backs the reward up to the root. There is no
/// rollout. Failed pushes become failure leaves that still count a visit.
class MctsSearch {
 public:
  MctsSearch(Configuration start, Workspace ws, PlannerParams params);

  /// One expansion. Returns false once the whole tree is exhausted.
  bool iterate();
  /// Iterates until a stop condition: stable best plan for the
  /// stabilization window, max_iterations, time limit, or exhaustion.
  Plan run();

  const SearchNode& root() const { return *root_; }
  std::size_t expansions() const { return expansions_; }
  bool timed_out() const { return timed_out_; }

 private:
  void ensure_actions(SearchNode& node);
  void expand(SearchNode& node);
  void note_success(const SearchNode& node);

  Workspace ws_;
  PlannerParams params_;
  Rng rng_;
  std::unique_ptr<SearchNode> root_;
  std::size_t expansions_ = 0;
  std::size_t simulations_ = 0;
  bool improved_ = false;
  bool timed_out_ = false;
  const SearchNode* best_ = nullptr;
};

/// Persistent-homology-informed MCTS planner. Throws InvalidStart when the
/// start is infeasible or already has a clear path region.
Plan plan_phim(const Configuration& config, const Workspace& ws, const PlannerParams& params);

}  // namespace topopush
