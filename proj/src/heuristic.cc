#include "probplan/heuristic.h"

using namespace std;

namespace probplan {
double Heuristic::value(const State &s) {
    auto it = memo_.find(s);
    if (it != memo_.end())
        return it->second;
    double h = compute(s);
    memo_.emplace(s, h);
    return h;
}
}
