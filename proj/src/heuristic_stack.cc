#include "probplan/heuristic_stack.h"

#include "probplan/errors.h"
#include "probplan/ff.h"
#include "probplan/h_m.h"
#include "probplan/min_min.h"

#include <cctype>

using namespace std;

namespace probplan {
namespace {
LayerSpec parse_layer(const string &name) {
    if (name == "zero")
        return {LayerKind::zero, 0, name};
    if (name == "ff")
        return {LayerKind::ff, 0, name};
    if (name == "h-m-1" || name == "h-m-2")
        return {LayerKind::h_m, size_t(name.back() - '0'), name};
    if (name == "min-min-ida*")
        return {LayerKind::min_min_ida, 0, name};
    if (name == "min-min-lrtdp")
        return {LayerKind::min_min_lrtdp, 0, name};
    const string prefix = "patterndb-";
    if (name.size() > prefix.size() && name.compare(0, prefix.size(), prefix) == 0) {
        string digits = name.substr(prefix.size());
        if (all_of(digits.begin(), digits.end(), [](unsigned char c) {return isdigit(c);})) {
            if (digits.size() > 6 || stoul(digits) == 0)
                throw InvalidStack("patterndb needs between 1 and 999999 groups");
            return {LayerKind::patterndb, stoul(digits), name};
        }
    }
    throw UnknownHeuristic(name);
}

bool is_search(LayerKind kind) {
    return kind == LayerKind::min_min_ida || kind == LayerKind::min_min_lrtdp;
}
}

vector<LayerSpec> parse_stack_spec(const string &spec) {
    vector<LayerSpec> layers;
    size_t start = 0;
    for (;;) {
        size_t bar = spec.find('|', start);
        string name = spec.substr(start, bar == string::npos ? string::npos : bar - start);
        if (name.empty())
            throw InvalidStack("empty heuristic name in '" + spec + "'");
        layers.push_back(parse_layer(name));
        if (bar == string::npos)
            break;
        start = bar + 1;
    }
    for (size_t i = 1; i < layers.size(); ++i) {
        LayerKind kind = layers[i].kind;
        if (is_search(kind)) {
            if (layers[i - 1].kind == LayerKind::ff)
                throw InvalidStack("'" + layers[i].text + "' needs an admissible heuristic on its left, not ff");
        } else {
            for (size_t j = 0; j < i; ++j)
                if (layers[j].kind != LayerKind::zero)
                    throw InvalidStack("'" + layers[i].text + "' must come first or follow only zero");
        }
    }
    return layers;
}

HeuristicStack::HeuristicStack(const GroundProblem &p, const string &spec, const StackOptions &options)
    : det_(make_unique<DetProblem>(make_min_min(p))), specs_(parse_stack_spec(spec)) {
    double D = options.dead_end_value;
    for (const LayerSpec &layer : specs_) {
        unique_ptr<Heuristic> h;
        switch (layer.kind) {
        case LayerKind::zero:
            h = make_unique<ZeroHeuristic>();
            break;
        case LayerKind::ff:
            h = make_unique<FfHeuristic>(*det_, D);
            break;
        case LayerKind::h_m:
            h = make_unique<HmHeuristic>(*det_, static_cast<int>(layer.parameter), D);
            break;
        case LayerKind::patterndb: {
            vector<AtomGroup> groups = detect_patterns(p, layer.parameter);
            PdbMode mode = options.prefer_additive ? PdbMode::additive : PdbMode::max;
            PatternDb db;
            try {
                db = patterndb_build(*det_, groups, mode, D);
            } catch (const AdditivityViolation &) {
                db = patterndb_build(*det_, groups, PdbMode::max, D);
                downgraded_ = true;
            }
            auto pdb = make_unique<PatternDbHeuristic>(std::move(db), layer.parameter);
            if (!pattern_db_)
                pattern_db_ = &pdb->db();
            h = std::move(pdb);
            break;
        }
        case LayerKind::min_min_ida:
        case LayerKind::min_min_lrtdp: {
            if (layers_.empty() && !implicit_base_)
                implicit_base_ = make_unique<ZeroHeuristic>();
            Heuristic &base = layers_.empty() ? *implicit_base_ : *layers_.back();
            if (layer.kind == LayerKind::min_min_ida)
                h = make_unique<MinMinIdaHeuristic>(*det_, base, D, options.search_budget);
            else
                h = make_unique<MinMinLrtdpHeuristic>(*det_, base, D, options.search_budget);
            break;
        }
        }
        layers_.push_back(std::move(h));
    }
}

unique_ptr<HeuristicStack> parse_stack(const GroundProblem &p, const string &spec,
                                       const StackOptions &options) {
    return make_unique<HeuristicStack>(p, spec, options);
}
}
