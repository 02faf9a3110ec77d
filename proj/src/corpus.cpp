#include "skeinlab/corpus.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>

namespace skeinlab {

std::uint64_t fnv1a64(std::string_view text) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

namespace {

bool cyclic_minimal(const std::vector<int>& letters) {
    const std::size_t m = letters.size();
    std::vector<int> rot(letters);
    for (std::size_t k = 1; k < m; ++k) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (rot < letters) return false;
    }
    return true;
}

} // namespace

std::vector<BraidWord> canonical_three_words(int max_len) {
    static const int alphabet[4] = {-2, -1, 1, 2};
    std::vector<BraidWord> out;
    std::vector<int> cur;
    auto emit = [&] {
        if (cyclic_minimal(cur)) {
            BraidWord b;
            b.n = 3;
            b.letters = cur;
            out.push_back(std::move(b));
        }
    };
    std::function<void(int)> rec = [&](int remaining) {
        emit();
        if (remaining == 0) return;
        for (int a : alphabet) {
            cur.push_back(a);
            rec(remaining - 1);
            cur.pop_back();
        }
    };
    // Depth-first emits in prefix order; re-sort by (length, lex) so the
    // enumeration order matches the documented one.
    rec(max_len);
    std::sort(out.begin(), out.end(), [](const BraidWord& a, const BraidWord& b) {
        if (a.letters.size() != b.letters.size())
            return a.letters.size() < b.letters.size();
        return a.letters < b.letters;
    });
    return out;
}

BraidWord random_word_n(std::mt19937_64& rng, int n, int max_len) {
    BraidWord b;
    b.n = n;
    const int len = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_len));
    b.letters.reserve(len);
    for (int k = 0; k < len; ++k) {
        const int idx = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
        b.letters.push_back((rng() & 1u) ? idx : -idx);
    }
    return b;
}

BraidWord random_word(std::mt19937_64& rng, int max_n, int max_len) {
    const int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n - 1));
    return random_word_n(rng, n, max_len);
}

int worker_count(std::size_t jobs) {
    long configured = 0;
    if (const char* env = std::getenv("SKEINLAB_THREADS")) {
        configured = std::strtol(env, nullptr, 10);
        if (configured < 1) configured = 1;
    } else {
        configured = static_cast<long>(std::thread::hardware_concurrency());
        if (configured < 1) configured = 1;
    }
    if (static_cast<std::size_t>(configured) > jobs)
        configured = static_cast<long>(jobs);
    return static_cast<int>(configured);
}

void parallel_for(std::size_t jobs, const std::function<void(std::size_t)>& fn) {
    const int workers = worker_count(jobs);
    if (workers <= 1) {
        for (std::size_t i = 0; i < jobs; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto body = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= jobs) return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers) - 1);
    for (int t = 1; t < workers; ++t) pool.emplace_back(body);
    body();
    for (auto& th : pool) th.join();
}

} // namespace skeinlab
