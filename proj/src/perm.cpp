#include "schubert/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace schubert {

Permutation Permutation::from_one_line(std::vector<int> word) {
    const int n = static_cast<int>(word.size());
    if (n == 0) {
        throw std::invalid_argument("invalid one-line word: empty");
    }
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i) {
        const int v = word[static_cast<std::size_t>(i)];
        if (v <= 0) {
            throw std::invalid_argument("invalid one-line word: value " + std::to_string(v) +
                                        " at position " + std::to_string(i + 1) +
                                        " is not positive");
        }
        if (v > n) {
            throw std::invalid_argument("invalid one-line word: value " + std::to_string(v) +
                                        " at position " + std::to_string(i + 1) +
                                        " out of range 1.." + std::to_string(n));
        }
        if (seen[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("invalid one-line word: duplicate value " +
                                        std::to_string(v) + " at position " +
                                        std::to_string(i + 1));
        }
        seen[static_cast<std::size_t>(v)] = 1;
    }
    return Permutation(std::move(word), 0);
}

Permutation Permutation::parse(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) {
        throw std::invalid_argument("invalid permutation: empty string");
    }
    std::vector<int> word;
    if (text.find(',') == std::string_view::npos) {
        // compact digit string, values 1..9 only
        for (char c : text) {
            if (c < '1' || c > '9') {
                throw std::invalid_argument(std::string("invalid permutation: unexpected character '") +
                                            c + "' in compact form");
            }
            word.push_back(c - '0');
        }
    } else {
        std::string buf(text);
        std::istringstream in(buf);
        std::string item;
        while (std::getline(in, item, ',')) {
            try {
                std::size_t pos = 0;
                const int v = std::stoi(item, &pos);
                while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
                if (pos != item.size()) throw std::invalid_argument(item);
                word.push_back(v);
            } catch (const std::exception&) {
                throw std::invalid_argument("invalid permutation: cannot parse entry '" + item + "'");
            }
        }
    }
    return from_one_line(std::move(word));
}

int Permutation::normalized_size() const {
    int n = size();
    while (n > 1 && word_[static_cast<std::size_t>(n) - 1] == n) --n;
    return n;
}

Permutation Permutation::normalized() const {
    const int n = normalized_size();
    if (n == size()) return *this;
    return Permutation(std::vector<int>(word_.begin(), word_.begin() + n), 0);
}

std::vector<int> Permutation::inverse_word() const {
    std::vector<int> inv(word_.size());
    for (int i = 1; i <= size(); ++i) {
        inv[static_cast<std::size_t>(word_[static_cast<std::size_t>(i) - 1]) - 1] = i;
    }
    return inv;
}

bool Permutation::operator==(const Permutation& other) const {
    const int n = std::max(size(), other.size());
    for (int i = 1; i <= n; ++i) {
        if ((*this)(i) != other(i)) return false;
    }
    return true;
}

std::size_t PermutationHash::operator()(const Permutation& w) const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    const int n = w.normalized_size();
    for (int i = 1; i <= n; ++i) {
        h ^= static_cast<std::size_t>(w(i)) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

std::string to_string(const Permutation& w) {
    std::string out;
    for (int i = 1; i <= w.size(); ++i) {
        if (i > 1) out += ',';
        out += std::to_string(w(i));
    }
    return out;
}

int coxeter_length(const Permutation& w) {
    int inv = 0;
    const int n = w.size();
    for (int i = 1; i < n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            if (w(i) > w(j)) ++inv;
        }
    }
    return inv;
}

std::vector<int> descents(const Permutation& w) {
    std::vector<int> out;
    for (int i = 1; i < w.size(); ++i) {
        if (w(i) > w(i + 1)) out.push_back(i);
    }
    return out;
}

Permutation apply_transposition(const Permutation& w, int a, int b) {
    if (a < 1 || a >= b) {
        throw std::invalid_argument("transposition positions must satisfy 1 <= a < b (got a=" +
                                    std::to_string(a) + ", b=" + std::to_string(b) + ")");
    }
    const int n = std::max(w.size(), b);
    std::vector<int> word(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) word[static_cast<std::size_t>(i) - 1] = w(i);
    std::swap(word[static_cast<std::size_t>(a) - 1], word[static_cast<std::size_t>(b) - 1]);
    return Permutation::from_one_line(std::move(word)).normalized();
}

bool is_length_increasing_transposition(const Permutation& w, int a, int b) {
    if (a < 1 || a >= b) {
        throw std::invalid_argument("transposition positions must satisfy 1 <= a < b");
    }
    if (w(a) >= w(b)) return false;
    for (int c = a + 1; c < b; ++c) {
        if (w(a) < w(c) && w(c) < w(b)) return false;
    }
    return true;
}

std::vector<Permutation> all_permutations(int n) {
    if (n < 1) {
        throw std::invalid_argument("all_permutations requires n >= 1");
    }
    std::vector<int> word(static_cast<std::size_t>(n));
    std::iota(word.begin(), word.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::from_one_line(word));
    } while (std::next_permutation(word.begin(), word.end()));
    return out;
}

Permutation bigrassmannian(int r, int p, int q) {
    if (r < 0 || p < 1 || q < 1) {
        throw std::invalid_argument("bigrassmannian requires r >= 0, p >= 1, q >= 1");
    }
    if (r >= std::min(p, q)) {
        throw std::invalid_argument("bigrassmannian requires r < min(p, q); the rank condition is vacuous at r=" +
                                    std::to_string(r));
    }
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(p + q - r));
    for (int v = 1; v <= r; ++v) word.push_back(v);
    for (int v = q + 1; v <= q + p - r; ++v) word.push_back(v);
    for (int v = r + 1; v <= q; ++v) word.push_back(v);
    return Permutation::from_one_line(std::move(word)).normalized();
}

} // namespace schubert
