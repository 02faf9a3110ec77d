#include "skeinlab/braid.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace skeinlab {

Perm Perm::identity(int n) {
    Perm p;
    p.img.resize(n);
    std::iota(p.img.begin(), p.img.end(), 1);
    return p;
}

int Perm::preimage(int value) const {
    for (int i = 0; i < size(); ++i)
        if (img[i] == value) return i + 1;
    throw std::invalid_argument("Perm::preimage: value out of range");
}

Perm Perm::swapped(int i) const {
    Perm p = *this;
    std::swap(p.img[i - 1], p.img[i]);
    return p;
}

int Perm::cycle_count() const {
    int n = size();
    std::vector<char> seen(n, 0);
    int cycles = 0;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (int j = i; !seen[j]; j = img[j] - 1) seen[j] = 1;
    }
    return cycles;
}

Perm Perm::drop_position(int j) const {
    const int n = size();
    Perm p;
    p.img.reserve(n - 1);
    for (int k = 1; k <= n - 1; ++k) p.img.push_back(k < j ? img[k - 1] : img[k]);
    return p;
}

// ---------------------------------------------------------------- parsing

namespace {

void expand_item(const std::string& tok, size_t offset, std::vector<int>& out) {
    auto bad = [&](const char* why) {
        throw BraidParseError("bad item '" + tok + "' at position " +
                              std::to_string(offset) + ": " + why);
    };
    const auto caret = tok.find('^');
    const std::string base_s = tok.substr(0, caret);
    std::string exp_s = caret == std::string::npos ? "" : tok.substr(caret + 1);

    auto parse_int = [&](const std::string& s, long& val) {
        if (s.empty()) bad("empty number");
        size_t pos = 0;
        try {
            val = std::stol(s, &pos);
        } catch (const std::exception&) {
            bad("not an integer");
        }
        if (pos != s.size()) bad("trailing characters");
    };

    long base = 0;
    parse_int(base_s, base);
    if (base == 0) bad("zero letter index");
    long e = 1;
    if (caret != std::string::npos) {
        parse_int(exp_s, e);
        if (e == 0) bad("zero exponent");
    }
    const int letter = static_cast<int>((base > 0) == (e > 0) ? std::labs(base)
                                                              : -std::labs(base));
    for (long k = 0; k < std::labs(e); ++k) out.push_back(letter);
}

}  // namespace

BraidWord parse_braid(const std::string& text) {
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() &&
               (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
            ++pos;
    };

    skip_ws();
    bool explicit_n = false;
    long n = 1;
    if (pos < text.size() && (text[pos] == 'B' || text[pos] == 'b')) {
        ++pos;
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos)
            throw BraidParseError("expected strand count after 'B' at position " +
                                  std::to_string(pos));
        n = std::stol(text.substr(start, pos - start));
        if (n < 1) throw BraidParseError("strand count must be >= 1");
        skip_ws();
        if (pos >= text.size() || text[pos] != ':')
            throw BraidParseError("expected ':' after strand count at position " +
                                  std::to_string(pos));
        ++pos;
        explicit_n = true;
    }

    BraidWord w;
    while (true) {
        skip_ws();
        if (pos >= text.size()) break;
        size_t start = pos;
        while (pos < text.size() &&
               !std::isspace(static_cast<unsigned char>(text[pos])) && text[pos] != ',')
            ++pos;
        expand_item(text.substr(start, pos - start), start, w.letters);
    }

    int max_index = 0;
    for (int l : w.letters) max_index = std::max(max_index, std::abs(l));
    if (explicit_n) {
        if (max_index > n - 1)
            throw BraidParseError("letter index " + std::to_string(max_index) +
                                  " out of range for B" + std::to_string(n));
        w.n = static_cast<int>(n);
    } else {
        w.n = max_index + 1;
    }
    return w;
}

std::string render_braid(const BraidWord& w) {
    std::ostringstream os;
    os << "B" << w.n << ":";
    size_t i = 0;
    while (i < w.letters.size()) {
        size_t j = i;
        while (j < w.letters.size() && w.letters[j] == w.letters[i]) ++j;
        os << " " << w.letters[i];
        if (j - i > 1) os << "^" << (j - i);
        i = j;
    }
    return os.str();
}

// ---------------------------------------------------------------- operations

long writhe(const BraidWord& w) {
    long s = 0;
    for (int l : w.letters) s += (l > 0) ? 1 : -1;
    return s;
}

std::vector<Syllable> syllables(const BraidWord& w) {
    std::vector<Syllable> stack;
    for (int l : w.letters) {
        const int idx = std::abs(l);
        const long e = l > 0 ? 1 : -1;
        if (!stack.empty() && stack.back().index == idx) {
            stack.back().exponent += e;
            if (stack.back().exponent == 0) stack.pop_back();
        } else {
            stack.push_back({idx, e});
        }
    }
    return stack;
}

BraidWord psi(int a, int b, const BraidWord& w) {
    if (!(0 <= a && a < b && b <= w.n)) throw std::invalid_argument("psi: need 0 <= a < b <= n");
    BraidWord r;
    r.n = b - a;
    for (int l : w.letters) {
        const int idx = std::abs(l);
        if (idx > a && idx < b) r.letters.push_back(l > 0 ? idx - a : -(idx - a));
    }
    return r;
}

Perm braid_permutation(const BraidWord& w) {
    Perm p = Perm::identity(w.n);
    for (int l : w.letters) p = p.swapped(std::abs(l));
    return p;
}

int component_count(const BraidWord& w) { return braid_permutation(w).cycle_count(); }

BraidWord mirror(const BraidWord& w) {
    BraidWord r = w;
    for (int& l : r.letters) l = -l;
    return r;
}

BraidWord stabilize(const BraidWord& w, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("stabilize: sign must be +-1");
    BraidWord r = w;
    r.n = w.n + 1;
    r.letters.push_back(sign > 0 ? w.n : -w.n);
    return r;
}

BraidWord cyclic_shift(const BraidWord& w, long k) {
    BraidWord r = w;
    if (w.letters.empty()) return r;
    const long m = static_cast<long>(w.letters.size());
    long s = ((k % m) + m) % m;
    std::rotate(r.letters.begin(), r.letters.begin() + s, r.letters.end());
    return r;
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
    if (a.n != b.n) throw std::invalid_argument("concat: strand counts differ");
    BraidWord r = a;
    r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
    return r;
}

BraidWord generator_power(int i, long e, int n) {
    if (i < 1 || i > n - 1) throw std::invalid_argument("generator_power: index out of range");
    BraidWord r;
    r.n = n;
    const int letter = e >= 0 ? i : -i;
    for (long k = 0; k < std::labs(e); ++k) r.letters.push_back(letter);
    return r;
}

BraidWord torus_word(long p, int q) {
    if (q < 2) throw std::invalid_argument("torus_word: need q >= 2");
    BraidWord r;
    r.n = q;
    if (p == 0) return r;
    std::vector<int> alpha;  // sigma_{q-1} ... sigma_1
    for (int i = q - 1; i >= 1; --i) alpha.push_back(i);
    for (long k = 0; k < std::labs(p); ++k)
        r.letters.insert(r.letters.end(), alpha.begin(), alpha.end());
    if (p < 0) {
        std::reverse(r.letters.begin(), r.letters.end());
        for (int& l : r.letters) l = -l;
    }
    return r;
}

}  // namespace skeinlab
