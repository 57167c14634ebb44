#include "ietlab/permutation.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace ietlab {

namespace {
std::vector<int> invert(const std::vector<int>& f) {
    std::vector<int> inv(f.size(), -1);
    for (size_t l = 0; l < f.size(); ++l) {
        if (f[l] < 0 || f[l] >= static_cast<int>(f.size()) || inv[f[l]] != -1)
            throw NotABijection();
        inv[f[l]] = static_cast<int>(l);
    }
    return inv;
}
}  // namespace

Permutation::Permutation(std::vector<int> top, std::vector<int> bottom,
                         std::vector<std::string> names)
    : top_(std::move(top)), bottom_(std::move(bottom)), names_(std::move(names)) {
    if (top_.size() != bottom_.size() || top_.size() < 2) throw NotABijection();
    top_inv_ = invert(top_);
    bottom_inv_ = invert(bottom_);
    if (names_.empty()) {
        names_.resize(top_.size());
        for (size_t l = 0; l < top_.size(); ++l) names_[l] = std::to_string(l + 1);
    }
    if (names_.size() != top_.size()) throw NotABijection();
}

bool Permutation::irreducible() const {
    // Reducible iff some proper prefix of positions is filled by the same
    // letter set in both rows. Track the symmetric difference size.
    std::vector<int> state(d(), 0);  // bit 0: in top prefix, bit 1: in bottom prefix
    int sym_diff = 0;
    for (int k = 0; k < d() - 1; ++k) {
        for (int bit : {0, 1}) {
            int l = bit == 0 ? top_inv_[k] : bottom_inv_[k];
            int before = state[l];
            state[l] |= 1 << bit;
            if (before == 0)
                ++sym_diff;
            else if (before != state[l])
                --sym_diff;  // letter now present in both prefixes
        }
        if (sym_diff == 0) return false;
    }
    return true;
}

std::vector<int> Permutation::canonical_word() const {
    std::vector<int> w(d());
    for (int i = 0; i < d(); ++i) w[i] = bottom_[top_inv_[i]];
    return w;
}

std::string Permutation::canonical_string() const {
    std::string s;
    for (int v : canonical_word()) {
        if (!s.empty()) s += ' ';
        s += std::to_string(v + 1);
    }
    return s;
}

std::string Permutation::to_string() const {
    std::string s;
    for (int i = 0; i < d(); ++i) {
        if (i) s += ' ';
        s += names_[top_inv_[i]];
    }
    s += " / ";
    for (int i = 0; i < d(); ++i) {
        if (i) s += ' ';
        s += names_[bottom_inv_[i]];
    }
    return s;
}

Permutation validate_permutation(const std::vector<std::string>& top_order,
                                 const std::vector<std::string>& bottom_order) {
    if (top_order.size() != bottom_order.size() || top_order.size() < 2)
        throw NotABijection("rows must have equal length d >= 2");
    const int d = static_cast<int>(top_order.size());
    std::unordered_map<std::string, int> letter_of;
    std::vector<std::string> names;
    std::vector<int> top(d), bottom(d, -1);
    for (int i = 0; i < d; ++i) {
        if (letter_of.count(top_order[i])) throw NotABijection("repeated letter in top row");
        letter_of[top_order[i]] = i;
        names.push_back(top_order[i]);
        top[i] = i;
    }
    for (int i = 0; i < d; ++i) {
        auto it = letter_of.find(bottom_order[i]);
        if (it == letter_of.end()) throw NotABijection("bottom row letter not in top row");
        if (bottom[it->second] != -1) throw NotABijection("repeated letter in bottom row");
        bottom[it->second] = i;
    }
    Permutation pi(std::move(top), std::move(bottom), std::move(names));
    if (!pi.irreducible()) throw Reducible();
    return pi;
}

Permutation parse_permutation(const std::string& text) {
    std::string top_part, bottom_part;
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        top_part = text.substr(0, slash);
        bottom_part = text.substr(slash + 1);
    } else {
        auto nl = text.find('\n');
        if (nl == std::string::npos) throw NotABijection("expected 'top / bottom'");
        top_part = text.substr(0, nl);
        bottom_part = text.substr(nl + 1);
    }
    auto tokens = [](const std::string& s) {
        std::vector<std::string> out;
        std::istringstream in(s);
        std::string tok;
        while (in >> tok) out.push_back(tok);
        return out;
    };
    auto t = tokens(top_part), b = tokens(bottom_part);
    if (t.size() == 1 && b.size() == 1 && t[0].size() == b[0].size() && t[0].size() > 1) {
        // Compact digit form like "1234/4321".
        auto split = [](const std::string& s) {
            std::vector<std::string> out;
            for (char c : s) out.emplace_back(1, c);
            return out;
        };
        return validate_permutation(split(t[0]), split(b[0]));
    }
    return validate_permutation(t, b);
}

Permutation permutation_from_word(const std::vector<int>& word) {
    const int d = static_cast<int>(word.size());
    std::vector<int> top(d), bottom(d);
    for (int l = 0; l < d; ++l) {
        top[l] = l;
        bottom[l] = word[l];
    }
    return Permutation(std::move(top), std::move(bottom));
}

Permutation rauzy_move(const Permutation& pi, RauzyKind kind) {
    const int d = pi.d();
    std::vector<int> top(d), bottom(d);
    std::vector<std::string> names(d);
    for (int l = 0; l < d; ++l) {
        top[l] = pi.top(l);
        bottom[l] = pi.bottom(l);
        names[l] = pi.name(l);
    }
    const int at = pi.alpha_top();
    const int ab = pi.alpha_bottom();
    if (kind == RauzyKind::top) {
        // Keep the top row; remove the bottom-last letter and reinsert it
        // right after the bottom position of the top-last letter.
        const int cut = pi.bottom(at);  // 0-based position
        std::vector<int> order;
        order.reserve(d);
        for (int p = 0; p < d; ++p) {
            int l = pi.letter_at_bottom(p);
            if (l == ab) continue;
            order.push_back(l);
            if (p == cut) order.push_back(ab);
        }
        for (int p = 0; p < d; ++p) bottom[order[p]] = p;
    } else {
        const int cut = pi.top(ab);
        std::vector<int> order;
        order.reserve(d);
        for (int p = 0; p < d; ++p) {
            int l = pi.letter_at_top(p);
            if (l == at) continue;
            order.push_back(l);
            if (p == cut) order.push_back(at);
        }
        for (int p = 0; p < d; ++p) top[order[p]] = p;
    }
    return Permutation(std::move(top), std::move(bottom), std::move(names));
}

}  // namespace ietlab
