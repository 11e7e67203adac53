#include "nashblow/families.hpp"

#include <stdexcept>
#include <vector>

namespace nashblow {

GeneratorSet one_segment_gamma(Int k) {
    if (k < 2) throw std::invalid_argument("one_segment_gamma requires k >= 2");
    std::vector<Vec2> gens;
    gens.reserve(static_cast<std::size_t>(k) + 1);
    for (Int j = 0; j <= k; ++j) gens.push_back(Vec2{1, j});
    return GeneratorSet(std::move(gens));
}

GeneratorSet two_segment_gamma(const TwoSegmentParams& p) {
    if (p.k < 1 || p.a < 1 || p.m < 1)
        throw std::invalid_argument("two_segment_gamma requires k, a, m >= 1");
    if (p.b != checked_add(checked_mul(p.a, p.k), 1))
        throw std::invalid_argument("two_segment_gamma requires b = a*k + 1");
    std::vector<Vec2> gens;
    for (Int j = 0; j <= p.k; ++j) gens.push_back(Vec2{1, j});
    for (Int t = 1; t <= p.m; ++t)
        gens.push_back(Vec2{checked_add(1, checked_mul(t, p.a)),
                            checked_add(p.k, checked_mul(t, p.b))});
    return GeneratorSet(std::move(gens));
}

Int fibonacci(Int j) {
    if (j < -1) throw std::invalid_argument("fibonacci is defined for j >= -1");
    Int prev = 1, cur = 0;  // f(-1), f(0)
    for (Int i = 0; i < j; ++i) {
        Int next = checked_add(prev, cur);
        prev = cur;
        cur = next;
    }
    return j == -1 ? prev : cur;
}

std::pair<Int, Int> vajda(Int n, Int r, Int s) {
    Int lhs = checked_sub(checked_mul(fibonacci(n), fibonacci(n + r + s)),
                          checked_mul(fibonacci(n + r), fibonacci(n + s)));
    Int sign = (n % 2 == 0) ? -1 : 1;  // (-1)^(n+1)
    Int rhs = checked_mul(sign, checked_mul(fibonacci(r), fibonacci(s)));
    return {lhs, rhs};
}

GeneratorSet fibonacci_gamma(Int l) {
    if (l < 4 || l % 2 != 0)
        throw std::invalid_argument("fibonacci_gamma requires an even l >= 4");
    std::vector<Vec2> gens{Vec2{1, 0}};
    for (Int i = 1; i <= l / 2; ++i)
        gens.push_back(Vec2{fibonacci(2 * i - 1), fibonacci(2 * i)});
    return GeneratorSet(std::move(gens));
}

std::array<Vec2, 6> fibonacci_chart_vectors(Int i) {
    if (i < 2 || i % 2 != 0)
        throw std::invalid_argument("fibonacci_chart_vectors requires an even i >= 2");
    auto f = [](Int j) { return fibonacci(j); };
    return {Vec2{checked_sub(f(i - 3), f(i + 1)), checked_sub(f(i - 2), f(i + 2))},
            Vec2{checked_sub(f(i - 3), f(i - 1)), checked_sub(f(i - 2), f(i))},
            Vec2{f(i - 1), f(i)},
            Vec2{f(i + 1), f(i + 2)},
            Vec2{checked_sub(f(i + 3), f(i + 1)), checked_sub(f(i + 4), f(i + 2))},
            Vec2{checked_sub(f(i + 3), f(i - 1)), checked_sub(f(i + 4), f(i))}};
}

UnimodularMap fibonacci_symmetry(Int l) {
    if (l < 4 || l % 2 != 0)
        throw std::invalid_argument("fibonacci_symmetry requires an even l >= 4");
    UnimodularMap t{fibonacci(l - 1), checked_sub(0, fibonacci(l - 2)),
                    fibonacci(l), checked_sub(0, fibonacci(l - 1))};
    if (t.det() != -1) throw std::logic_error("fibonacci symmetry must have determinant -1");
    return t;
}

}  // namespace nashblow
