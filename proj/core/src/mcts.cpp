#include "topopush/mcts.hpp"

#include <algorithm>
#include <cmath>

#include "topopush/errors.hpp"
#include "topopush/homology.hpp"
#include "topopush/path_region.hpp"

namespace topopush {

std::size_t region_obstacle_count(const Configuration& config, const Workspace& ws) {
  return obstacles_in_region(config, compute_path_region(config, ws)).size();
}

std::size_t region_component_count(const Configuration& config, const Workspace& ws, double r) {
  const PathRegion region = compute_path_region(config, ws);
  std::vector<Vec2> centers;
  for (const std::size_t i : obstacles_in_region(config, region)) {
    centers.push_back(region.to_frame(config.obstacles[i].center));
  }
  return component_count(centers, r);
}

double reward_from_counts(std::size_t region_parent, std::size_t region_child, std::size_t components_parent,
                          std::size_t components_child) {
  const double removed = static_cast<double>(region_parent) - static_cast<double>(region_child);
  const double created =
      std::max(static_cast<double>(components_child) - static_cast<double>(components_parent), 0.0);
  const double gate = removed > 0.0 ? 1.0 : 0.0;
  return removed + gate * created;
}

double reward(const Configuration& parent, const Configuration& child, const Workspace& ws,
              double r_used) {
  return reward_from_counts(region_obstacle_count(parent, ws), region_obstacle_count(child, ws),
                            region_component_count(parent, ws, r_used),
                            region_component_count(child, ws, r_used));
}

double ucb(std::size_t parent_visits, std::size_t child_visits, double child_cum_reward, double c) {
  const double n = static_cast<double>(child_visits);
  return child_cum_reward / n + c * std::sqrt(2.0 * std::log(static_cast<double>(parent_visits)) / n);
}

std::optional<std::size_t> select_child(const SearchNode& node, double c) {
  std::optional<std::size_t> best;
  double best_score = 0.0;
  for (std::size_t k = 0; k < node.children.size(); ++k) {
    const SearchNode* ch = node.children[k].get();
    if (!ch || ch->status == NodeStatus::Failure || ch->exhausted) continue;
    const double score = ucb(node.visits, ch->visits, ch->cumulative_reward, c);
    if (!best || score > best_score) {
      best = k;
      best_score = score;
    }
  }
  return best;
}

namespace {

double path_reward(const SearchNode& node) {
  double total = 0.0;
  for (const SearchNode* p = &node; p; p = p->parent) total += p->edge_reward;
  return total;
}

std::vector<const SearchNode*> path_to(const SearchNode& node) {
  std::vector<const SearchNode*> out;
  for (const SearchNode* p = &node; p->parent; p = p->parent) out.push_back(p);
  std::reverse(out.begin(), out.end());
  return out;
}

// strict "a is a better plan than b"
bool better_success(const SearchNode& a, const SearchNode& b) {
  if (a.depth != b.depth) return a.depth < b.depth;
  const double ra = path_reward(a);
  const double rb = path_reward(b);
  if (ra != rb) return ra > rb;
  const auto pa = path_to(a);
  const auto pb = path_to(b);
  for (std::size_t k = 0; k < pa.size(); ++k) {
    if (action_less(pa[k]->action, pb[k]->action)) return true;
    if (action_less(pb[k]->action, pa[k]->action)) return false;
  }
  return false;
}

void collect_successes(const SearchNode& node, std::vector<const SearchNode*>& out) {
  if (node.status == NodeStatus::TerminalSuccess) out.push_back(&node);
  for (const auto& ch : node.children) {
    if (ch) collect_successes(*ch, out);
  }
}

Plan plan_from(const std::vector<const SearchNode*>& path, bool success) {
  Plan plan;
  for (const SearchNode* n : path) {
    plan.actions.push_back(n->action);
    plan.states.push_back(n->config);
  }
  plan.success = success;
  plan.status = success ? PlanStatus::Success : PlanStatus::NoPlanFound;
  return plan;
}

std::vector<const SearchNode*> greedy_prefix(const SearchNode& root) {
  std::vector<const SearchNode*> path;
  const SearchNode* node = &root;
  for (;;) {
    const SearchNode* next = nullptr;
    for (const auto& ch : node->children) {
      if (!ch || ch->status == NodeStatus::Failure) continue;
      if (!next || ch->mean_reward() > next->mean_reward()) next = ch.get();
    }
    if (!next) break;
    path.push_back(next);
    node = next;
  }
  return path;
}

}  // namespace

Plan extract_best_path(const SearchNode& root) {
  std::vector<const SearchNode*> successes;
  collect_successes(root, successes);
  if (successes.empty()) return plan_from(greedy_prefix(root), false);
  const SearchNode* best = successes.front();
  for (const SearchNode* s : successes) {
    if (better_success(*s, *best)) best = s;
  }
  return plan_from(path_to(*best), true);
}

MctsSearch::MctsSearch(Configuration start, Workspace ws, PlannerParams params)
    : ws_(ws), params_(params), rng_(params.seed), root_(std::make_unique<SearchNode>()) {
  root_->config = std::move(start);
  if (is_goal(root_->config, ws_)) {
    root_->status = NodeStatus::TerminalSuccess;
    root_->exhausted = true;
    best_ = root_.get();
  }
}

void MctsSearch::ensure_actions(SearchNode& node) {
  if (node.actions_ready) return;
  node.actions = available_actions(node.config, ws_, params_.nu, params_.h);
  node.children.resize(node.actions.size());
  node.unexpanded.resize(node.actions.size());
  for (std::size_t k = 0; k < node.unexpanded.size(); ++k) node.unexpanded[k] = k;
  node.actions_ready = true;
}

void MctsSearch::note_success(const SearchNode& node) {
  if (!best_ || better_success(node, *best_)) {
    best_ = &node;
    improved_ = true;
  }
}

void MctsSearch::expand(SearchNode& node) {
  const std::size_t pick = rng_.index(node.unexpanded.size());
  const std::size_t k = node.unexpanded[pick];
  node.unexpanded.erase(node.unexpanded.begin() + static_cast<std::ptrdiff_t>(pick));

  auto child = std::make_unique<SearchNode>();
  child->action = node.actions[k];
  child->parent = &node;
  child->depth = node.depth + 1;

  PushResult result = simulate_push(node.config, ws_, child->action);
  ++simulations_;
  ++expansions_;

  double gained = 0.0;
  if (auto* out = std::get_if<PushOutcome>(&result)) {
    child->config = std::move(out->next);
    gained = reward(node.config, child->config, ws_, child->action.radius);
    if (is_goal(child->config, ws_)) {
      child->status = NodeStatus::TerminalSuccess;
      child->exhausted = true;
    } else {
      child->exhausted = child->depth >= params_.max_depth;
    }
  } else {
    child->status = NodeStatus::Failure;
    child->exhausted = true;
  }
  child->visits = 1;
  child->cumulative_reward = gained;
  child->edge_reward = gained;

  for (SearchNode* p = &node; p; p = p->parent) {
    ++p->visits;
    p->cumulative_reward += gained;
  }
  SearchNode& placed = *(node.children[k] = std::move(child));
  if (placed.status == NodeStatus::TerminalSuccess) note_success(placed);
}

bool MctsSearch::iterate() {
  for (;;) {
    if (root_->exhausted) return false;
    SearchNode* node = root_.get();
    for (;;) {
      ensure_actions(*node);
      if (!node->unexpanded.empty()) {
        expand(*node);
        return true;
      }
      const auto pick = select_child(*node, params_.c);
      if (!pick) {
        node->exhausted = true;
        break;
      }
      node = node->children[*pick].get();
    }
  }
}

Plan MctsSearch::run() {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(clock::now() - start).count(); };

  std::size_t stable = 0;
  while (expansions_ < params_.max_iterations) {
    if (elapsed() >= params_.time_limit_s) {
      timed_out_ = true;
      break;
    }
    improved_ = false;
    if (!iterate()) break;
    if (best_) {
      if (improved_) stable = 0;
      else if (++stable >= params_.stabilization_window) break;
    }
  }

  // the incumbent is tracked during search, so no tree walk is needed here
  Plan plan = best_ ? plan_from(path_to(*best_), true) : plan_from(greedy_prefix(*root_), false);
  plan.stats.iterations = expansions_;
  plan.stats.simulations = simulations_;
  plan.stats.seconds = elapsed();
  if (!plan.success && timed_out_) plan.status = PlanStatus::TimeBudgetExceeded;
  return plan;
}

Plan plan_phim(const Configuration& config, const Workspace& ws, const PlannerParams& params) {
  if (!is_feasible(config, ws)) throw InvalidStart("start configuration is infeasible");
  if (is_goal(config, ws)) throw InvalidStart("path region is already clear");
  MctsSearch search(config, ws, params);
  return search.run();
}

}  // namespace topopush
