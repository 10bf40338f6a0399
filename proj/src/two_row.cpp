#include "sytbij/two_row.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace sytbij {

TwoRowState as_state(const ArrayPair& a) {
    return TwoRowState{a.top, a.bottom};
}

Tableau as_tableau(const TwoRowState& s) {
    Tableau t;
    t.rows.push_back(s.top);
    if (!s.bottom.empty()) t.rows.push_back(s.bottom);
    return t;
}

bool is_standard_state(const TwoRowState& s) {
    for (std::size_t j = 0; j < s.bottom.size(); ++j)
        if (s.top[j] > s.bottom[j]) return false;
    return true;
}

namespace {

bool strictly_increasing(const std::vector<int>& row) {
    for (std::size_t i = 1; i < row.size(); ++i)
        if (row[i - 1] >= row[i]) return false;
    return true;
}

}  // namespace

ForwardStep forward_step(const TwoRowState& s) {
    const auto& c = s.top;
    const auto& d = s.bottom;
    int pivot = -1;  // 0-based
    for (std::size_t j = 0; j < d.size(); ++j)
        if (c[j] > d[j]) {
            pivot = static_cast<int>(j);
            break;
        }
    if (pivot < 0) throw std::invalid_argument("forward_step: state is already standard");

    TwoRowState next;
    next.top.assign(d.begin(), d.begin() + pivot + 1);
    next.top.insert(next.top.end(), c.begin() + pivot, c.end());
    next.bottom.assign(c.begin(), c.begin() + pivot);
    next.bottom.insert(next.bottom.end(), d.begin() + pivot + 1, d.end());
    return ForwardStep{std::move(next), pivot + 1};
}

TwoRowState inverse_step(const TwoRowState& s) {
    const auto& c = s.top;
    const auto& d = s.bottom;
    // A forward step turns lengths (r,s) with r >= s into (r+1,s-1), so only
    // states with top at least two longer than bottom have preimages.
    if (c.size() < d.size() + 2)
        throw std::invalid_argument(
            "inverse_step: state is not in the image of a forward step (row lengths)");

    int pivot = static_cast<int>(d.size());  // 0-based; d.size() when no column has top < bottom
    for (std::size_t j = 0; j < d.size(); ++j)
        if (c[j] < d[j]) {
            pivot = static_cast<int>(j);
            break;
        }

    TwoRowState prev;
    prev.top.assign(d.begin(), d.begin() + pivot);
    prev.top.insert(prev.top.end(), c.begin() + pivot + 1, c.end());
    prev.bottom.assign(c.begin(), c.begin() + pivot + 1);
    prev.bottom.insert(prev.bottom.end(), d.begin() + pivot, d.end());
    if (!strictly_increasing(prev.top) || !strictly_increasing(prev.bottom))
        throw std::invalid_argument("inverse_step: state is not in the image of a forward step");
    return prev;
}

Tableau to_two_row_syt(const ArrayPair& a, BijectionTrace* trace) {
    TwoRowState state = as_state(a);
    const int budget = a.half();
    if (trace) {
        trace->states.assign(1, state);
        trace->pivots.clear();
    }
    int steps = 0;
    while (!is_standard_state(state)) {
        if (steps >= budget)
            throw std::logic_error("to_two_row_syt: step budget " + std::to_string(budget) +
                                   " exceeded");
        ForwardStep fs = forward_step(state);
        state = std::move(fs.state);
        ++steps;
        if (trace) {
            trace->states.push_back(state);
            trace->pivots.push_back(fs.pivot);
        }
    }
    return as_tableau(state);
}

ArrayPair from_two_row_syt(const Tableau& t) {
    if (t.rows.empty() || t.rows.size() > 2)
        throw std::invalid_argument("rows: expected a tableau with one or two rows");
    if (!is_standard(t)) throw std::invalid_argument("rows: tableau is not standard");

    TwoRowState state{t.rows[0], t.rows.size() == 2 ? t.rows[1] : std::vector<int>{}};
    const int total = static_cast<int>(state.top.size() + state.bottom.size());
    const int target_top = (total + 1) / 2;
    const int steps = static_cast<int>(state.top.size()) - target_top;
    for (int i = 0; i < steps; ++i) state = inverse_step(state);
    return array_pair(std::move(state.top), std::move(state.bottom));
}

}  // namespace sytbij
