#include "probplan/solver.h"

#include "probplan/errors.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

using namespace std;

namespace probplan {
optional<Algorithm> parse_algorithm(const string &name) {
    if (name == "vi")
        return Algorithm::vi;
    if (name == "lrtdp")
        return Algorithm::lrtdp;
    if (name == "hdp")
        return Algorithm::hdp;
    if (name == "asp")
        return Algorithm::asp;
    return nullopt;
}

string algorithm_name(Algorithm algorithm) {
    switch (algorithm) {
    case Algorithm::vi: return "vi";
    case Algorithm::lrtdp: return "lrtdp";
    case Algorithm::hdp: return "hdp";
    case Algorithm::asp: return "asp";
    }
    return "?";
}

void SolverConfig::validate() const {
    if (!(epsilon > 0))
        throw InputError("epsilon must be positive");
    if (!(weight >= 1))
        throw InputError("heuristic weight must be at least 1");
    if (!(dead_end_value > 0))
        throw InputError("dead-end value must be positive");
    if (trial_cap < 1)
        throw InputError("trial cap must be at least 1");
    if (budget_seconds < 0)
        throw InputError("budget must be nonnegative");
}

Bellman::Bellman(SearchSpace &space, Heuristic &heuristic, const SolverConfig &config)
    : space_(space), heuristic_(heuristic), config_(config), dead_ends_(space) {
    config_.validate();
}

ValueEntry &Bellman::entry(StateRef s) {
    ValueEntry &e = values_[s];
    if (!e.initialized) {
        e.initialized = true;
        if (space_.is_goal(s)) {
            e.value = 0;
            e.solved = true;
            e.settled = true;
        } else {
            double h = heuristic_.value(space_.state(s));
            e.value = min(config_.weight * max(h, 0.0), config_.dead_end_value);
        }
    }
    return e;
}

bool Bellman::settle(StateRef s) {
    ValueEntry &e = entry(s);
    if (!e.settled) {
        e.settled = true;
        if (dead_ends_.is_dead_end(s)) {
            e.value = config_.dead_end_value;
            e.solved = true;
            e.dead = true;
            e.best_action = -1;
        }
    }
    return e.dead || space_.is_goal(s);
}

double Bellman::qvalue(StateRef s, OpId a) {
    double q = space_.problem().operators[a].cost;
    for (const Successor &succ : space_.successors(s, a))
        q += succ.probability * value(succ.state);
    return q;
}

pair<OpId, double> Bellman::best(StateRef s) {
    const vector<OpId> &ops = space_.applicable(s);
    if (ops.empty())
        throw DeadEnd();
    OpId arg = ops.front();
    double q_min = numeric_limits<double>::infinity();
    for (OpId a : ops) {
        double q = qvalue(s, a);
        if (q < q_min) {
            q_min = q;
            arg = a;
        }
    }
    return {arg, q_min};
}

double Bellman::residual(StateRef s) {
    if (space_.is_goal(s))
        return 0;
    double current = value(s);
    if (space_.applicable(s).empty())
        return fabs(current - config_.dead_end_value);
    return fabs(current - min(best(s).second, config_.dead_end_value));
}

OpId Bellman::greedy(StateRef s) {
    return best(s).first;
}

double Bellman::backup(StateRef s) {
    if (space_.is_goal(s))
        return 0;
    double old = value(s);
    if (settle(s))
        return fabs(value(s) - old);
    ++backups_;
    auto [a, q] = best(s);
    double updated = min(q, config_.dead_end_value);
    // best() may have grown the table; fetch the entry again.
    ValueEntry &fresh = entry(s);
    fresh.value = updated;
    fresh.best_action = static_cast<int32_t>(a);
    if ((backups_ & 1023) == 0)
        check_clock();
    return fabs(updated - old);
}

StateRef Bellman::sample(StateRef s, OpId a, Rng &rng) {
    size_t i = sample_outcome(space_.problem().operators[a], rng.uniform());
    return space_.outcome_successor(s, a, i);
}

void Bellman::begin_marks() {
    if (++epoch_ == 0) {
        fill(marks_.begin(), marks_.end(), 0);
        epoch_ = 1;
    }
}

bool Bellman::mark(StateRef s) {
    if (s.id >= marks_.size())
        marks_.resize(max<size_t>(s.id + 1, marks_.size() * 2), 0);
    if (marks_[s.id] == epoch_)
        return false;
    marks_[s.id] = epoch_;
    return true;
}

void Bellman::start_clock() {
    if (config_.deadline)
        deadline_ = config_.deadline;
    else if (config_.budget_seconds > 0)
        deadline_ = chrono::steady_clock::now() +
            chrono::duration_cast<chrono::steady_clock::duration>(
                chrono::duration<double>(config_.budget_seconds));
}

void Bellman::check_clock() {
    if (deadline_ && chrono::steady_clock::now() > *deadline_)
        throw SolverFailure("solver exceeded its time budget");
}

bool Bellman::check_solved(StateRef s) {
    bool rv = true;
    vector<StateRef> open;
    vector<StateRef> closed;
    begin_marks();
    if (!solved(s)) {
        open.push_back(s);
        mark(s);
    }
    while (!open.empty()) {
        StateRef current = open.back();
        open.pop_back();
        closed.push_back(current);
        double before = value(current);
        if (settle(current)) {
            // Residuals computed before a late dead-end discovery are stale.
            if (value(current) != before)
                rv = false;
            continue;
        }
        if (residual(current) > config_.epsilon) {
            rv = false;
            continue;
        }
        OpId a = greedy(current);
        for (const Successor &succ : space_.successors(current, a))
            if (!solved(succ.state) && mark(succ.state))
                open.push_back(succ.state);
    }
    if (rv) {
        for (StateRef t : closed)
            entry(t).solved = true;
    } else {
        while (!closed.empty()) {
            backup(closed.back());
            closed.pop_back();
        }
    }
    return rv;
}

void extract_policy(Bellman &ctx, StateRef s, SolveResult &result) {
    result.policy.clear();
    result.envelope.clear();
    ctx.begin_marks();
    deque<StateRef> queue{s};
    ctx.mark(s);
    while (!queue.empty()) {
        StateRef current = queue.front();
        queue.pop_front();
        result.envelope.push_back(current);
        if (ctx.settle(current))
            continue;
        OpId a = ctx.greedy(current);
        result.policy.emplace(current, a);
        for (const Successor &succ : ctx.space().successors(current, a))
            if (ctx.mark(succ.state))
                queue.push_back(succ.state);
    }
    result.v0 = ctx.value(s);
    result.states_expanded = ctx.space().store().size();
    result.backups = ctx.backups();
}

SolveResult vi(Bellman &ctx) {
    ctx.start_clock();
    SearchSpace &space = ctx.space();
    StateRef s0 = space.initial();
    const SolverConfig &cfg = ctx.config();

    vector<StateRef> states;
    ctx.begin_marks();
    ctx.mark(s0);
    states.push_back(s0);
    for (size_t i = 0; i < states.size(); ++i) {
        StateRef s = states[i];
        if (space.is_goal(s))
            continue;
        for (OpId a : space.applicable(s)) {
            for (const Successor &succ : space.successors(s, a)) {
                if (ctx.mark(succ.state)) {
                    if (states.size() >= cfg.state_limit)
                        throw OutOfMemory("reachable state space exceeds " +
                                          to_string(cfg.state_limit) + " states");
                    states.push_back(succ.state);
                }
            }
        }
    }

    SolveResult result;
    for (;;) {
        double max_change = 0;
        for (StateRef s : states)
            max_change = max(max_change, ctx.backup(s));
        ++result.iterations;
        if (cfg.progress)
            cfg.progress(result.iterations, ctx.value(s0), max_change);
        ctx.check_clock();
        if (max_change <= cfg.epsilon)
            break;
    }
    result.converged = true;
    extract_policy(ctx, s0, result);
    return result;
}

size_t lrtdp_from(Bellman &ctx, StateRef s0, Rng &rng) {
    const SolverConfig &cfg = ctx.config();
    size_t trials = 0;
    vector<StateRef> visited;
    while (!ctx.solved(s0)) {
        visited.clear();
        StateRef s = s0;
        while (!ctx.solved(s)) {
            visited.push_back(s);
            ctx.backup(s);
            if (ctx.solved(s) || visited.size() >= cfg.trial_cap)
                break;
            s = ctx.sample(s, ctx.greedy(s), rng);
        }
        while (!visited.empty()) {
            StateRef t = visited.back();
            visited.pop_back();
            if (!ctx.check_solved(t))
                break;
        }
        ++trials;
        if (cfg.progress)
            cfg.progress(trials, ctx.value(s0), ctx.residual(s0));
        ctx.check_clock();
    }
    return trials;
}

SolveResult lrtdp(Bellman &ctx) {
    ctx.start_clock();
    StateRef s0 = ctx.space().initial();
    Rng rng(ctx.config().seed);
    SolveResult result;
    result.iterations = lrtdp_from(ctx, s0, rng);
    result.converged = true;
    extract_policy(ctx, s0, result);
    return result;
}

namespace {
// Tarjan-based depth-first labeling over the greedy graph.
class HdpSearch {
    Bellman &ctx;
    double epsilon;
    vector<uint32_t> index_;
    vector<uint32_t> low_;
    vector<uint32_t> pass_of_;
    vector<char> on_stack_;
    vector<StateRef> stack_;
    uint32_t next_index_ = 0;
    uint32_t pass_ = 0;

    void ensure(StateRef s) {
        if (s.id >= index_.size()) {
            size_t n = max<size_t>(s.id + 1, index_.size() * 2);
            index_.resize(n);
            low_.resize(n);
            pass_of_.resize(n, 0);
            on_stack_.resize(n, 0);
        }
    }

    bool visited(StateRef s) {
        ensure(s);
        return pass_of_[s.id] == pass_;
    }

    bool dfs(StateRef s) {
        if (ctx.solved(s))
            return false;
        double before = ctx.value(s);
        if (ctx.settle(s)) {
            ctx.entry(s).solved = true;
            // A dead end found only now has just jumped to D, so its predecessors are stale.
            return ctx.value(s) != before;
        }
        if (ctx.residual(s) > epsilon) {
            ctx.backup(s);
            return true;
        }
        ensure(s);
        pass_of_[s.id] = pass_;
        index_[s.id] = low_[s.id] = next_index_++;
        stack_.push_back(s);
        on_stack_[s.id] = 1;

        bool flag = false;
        OpId a = ctx.greedy(s);
        // Copy: recursive calls may expand new states.
        vector<Successor> succs = ctx.space().successors(s, a);
        for (const Successor &succ : succs) {
            StateRef t = succ.state;
            if (!visited(t)) {
                flag = dfs(t) || flag;
                if (visited(t))
                    low_[s.id] = min(low_[s.id], low_[t.id]);
            } else if (on_stack_[t.id]) {
                low_[s.id] = min(low_[s.id], index_[t.id]);
            }
        }
        if (flag)
            return true;
        if (low_[s.id] == index_[s.id]) {
            for (;;) {
                StateRef t = stack_.back();
                stack_.pop_back();
                on_stack_[t.id] = 0;
                ctx.entry(t).solved = true;
                if (t == s)
                    break;
            }
        }
        return false;
    }

public:
    HdpSearch(Bellman &ctx) : ctx(ctx), epsilon(ctx.config().epsilon) {}

    void pass(StateRef s0) {
        ++pass_;
        next_index_ = 0;
        for (StateRef t : stack_)
            on_stack_[t.id] = 0;
        stack_.clear();
        dfs(s0);
    }
};
}

SolveResult hdp(Bellman &ctx) {
    ctx.start_clock();
    StateRef s0 = ctx.space().initial();
    const SolverConfig &cfg = ctx.config();
    HdpSearch search(ctx);
    SolveResult result;
    while (!ctx.solved(s0)) {
        search.pass(s0);
        ++result.iterations;
        if (cfg.progress)
            cfg.progress(result.iterations, ctx.value(s0), ctx.residual(s0));
        ctx.check_clock();
    }
    result.converged = true;
    extract_policy(ctx, s0, result);
    return result;
}

SolveResult solve(Algorithm algorithm, Bellman &ctx) {
    switch (algorithm) {
    case Algorithm::vi: return vi(ctx);
    case Algorithm::lrtdp: return lrtdp(ctx);
    case Algorithm::hdp: return hdp(ctx);
    case Algorithm::asp: break;
    }
    throw InputError("asp is an online algorithm and has no offline solve");
}
}
