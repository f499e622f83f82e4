#include "trib/sequence.hpp"

#include "trib/errors.hpp"

#include <string>
#include <utility>

namespace trib {

namespace {

// Sliding window (X(i), X(i+1), X(i+2)); updates in place to avoid
// reallocating limbs on every step.
struct Window {
    Zint a;
    Zint b;
    Zint c;

    explicit Window(SeqId id)
    {
        auto init = initial_terms(id);
        a = init[0];
        b = init[1];
        c = init[2];
    }

    void forward()
    {
        a += b;
        a += c;
        swap(a, b);
        swap(b, c);
    }

    void backward()
    {
        c -= b;
        c -= a;
        swap(b, c);
        swap(a, b);
    }

    // Moves from index 0 to index n.
    void seek(Index n)
    {
        for (Index i = 0; i < n; ++i)
            forward();
        for (Index i = 0; i > n; --i)
            backward();
    }
};

} // namespace

std::string_view to_string(SeqId id)
{
    switch (id) {
    case SeqId::T: return "T";
    case SeqId::K: return "K";
    case SeqId::H: return "H";
    }
    return "?";
}

std::optional<SeqId> parse_seq_id(std::string_view text)
{
    for (SeqId id : all_sequences)
        if (to_string(id) == text)
            return id;
    return std::nullopt;
}

std::array<long, 3> initial_terms(SeqId id)
{
    switch (id) {
    case SeqId::T: return {0, 1, 1};
    // power sums of the roots of x^3 - x^2 - x - 1 (Newton's identities)
    case SeqId::K: return {3, 1, 3};
    case SeqId::H: return {3, 0, 2};
    }
    return {0, 0, 0};
}

Zint seq_value(SeqId id, Index n)
{
    Window w(id);
    w.seek(n);
    return w.a;
}

std::vector<Zint> seq_range(SeqId id, Index lo, Index hi)
{
    if (lo > hi)
        throw InvalidRange("seq_range: lo (" + std::to_string(lo) + ") > hi (" + std::to_string(hi) + ")");
    Window w(id);
    w.seek(lo);
    std::vector<Zint> out;
    out.reserve(static_cast<std::size_t>(hi - lo + 1));
    out.push_back(w.a);
    for (Index i = lo; i < hi; ++i) {
        w.forward();
        out.push_back(w.a);
    }
    return out;
}

Stencil stencil(SeqId id, Index n)
{
    auto v = seq_range(id, n - 3, n + 1);
    return {std::move(v[4]), std::move(v[3]), std::move(v[2]), std::move(v[1]), std::move(v[0])};
}

Stencil stencil_from_state(const StateVector& s)
{
    Stencil out;
    out.next = s.mid;
    out.cur = s.bot;
    out.prev1 = s.top - s.mid - s.bot;
    out.prev2 = s.mid - s.bot - out.prev1;
    out.prev3 = s.bot - out.prev1 - out.prev2;
    return out;
}

StateVector advance_state(const StateVector& v)
{
    return {v.top + v.mid + v.bot, v.top, v.mid};
}

StateVector initial_state()
{
    auto init = initial_terms(SeqId::H);
    return {init[2], init[1], init[0]};
}

Zint h_from_k_t(Index n)
{
    return seq_value(SeqId::K, n) - seq_value(SeqId::T, n);
}

Zint h_from_t(Index n)
{
    if (n < 1)
        throw DomainError("h_from_t: requires n >= 1, got " + std::to_string(n));
    auto t = seq_range(SeqId::T, n - 1, n + 1);
    return 3 * t[2] - 3 * t[1] - t[0];
}

Zint k41_numerator(const Zint& h_n2, const Zint& h_n1, const Zint& h_n)
{
    return 9 * h_n2 - 2 * h_n1 + 35 * h_n;
}

Zint k_from_h(Index n)
{
    auto h = seq_range(SeqId::H, n, n + 2);
    return exact_quotient(k41_numerator(h[2], h[1], h[0]), 41, "k_from_h");
}

Zint r_numerator(const Stencil& h)
{
    Zint acc = 4 * h.cur * h.prev1;
    acc += 2 * h.cur * h.prev2;
    acc += 6 * h.cur * h.prev3;
    acc += 6 * h.cur * h.cur;
    acc -= 6 * h.next * h.prev1;
    acc -= 6 * h.prev1 * h.prev2;
    acc -= 4 * h.next * h.prev2;
    acc += h.next * h.prev3;
    acc -= 3 * h.prev1 * h.prev1;
    return acc;
}

Zint r_value(Index n)
{
    return exact_quotient(r_numerator(stencil(SeqId::H, n)), 41, "r_value");
}

} // namespace trib
