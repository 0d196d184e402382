#include "hadwiger/affine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hadwiger/bitset.hpp"

namespace hadwiger {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; (long long)d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

int FieldContext::add(int x, int y) const {
    if (e == 1) return (x + y) % p;
    int a = (x % p + y % p) % p;
    int b = (x / p + y / p) % p;
    return a + b * p;
}

int FieldContext::neg(int x) const {
    if (e == 1) return (p - x % p) % p;
    int a = (p - x % p) % p;
    int b = (p - x / p) % p;
    return a + b * p;
}

int FieldContext::mul(int x, int y) const {
    if (e == 1) return int((long long)x * y % p);
    // (x0 + x1 a)(y0 + y1 a) with a^2 = -(irr_b a + irr_c)
    long long x0 = x % p, x1 = x / p, y0 = y % p, y1 = y / p;
    long long c0 = x0 * y0 % p;
    long long c1 = (x0 * y1 + x1 * y0) % p;
    long long c2 = x1 * y1 % p;
    long long a0 = (c0 + c2 * (p - irr_c)) % p;
    long long a1 = (c1 + c2 * (p - irr_b)) % p;
    return int(a0 + a1 * p);
}

int FieldContext::inv(int x) const {
    if (x % q == 0) throw std::invalid_argument("field inverse of zero");
    int result = 1, base = x;
    for (int exp = q - 2; exp > 0; exp >>= 1) {
        if (exp & 1) result = mul(result, base);
        base = mul(base, base);
    }
    return result;
}

FieldContext field_context(int p, int e) {
    if (!is_prime(p)) throw std::invalid_argument("field_context: characteristic must be prime");
    if (e != 1 && e != 2) throw std::invalid_argument("field_context: degree must be 1 or 2");
    FieldContext ctx;
    ctx.p = p;
    ctx.e = e;
    ctx.q = e == 1 ? p : p * p;
    if (e == 2) {
        bool found = false;
        for (int b = 0; b < p && !found; ++b)
            for (int c = 0; c < p && !found; ++c) {
                bool has_root = false;
                for (int x = 0; x < p && !has_root; ++x)
                    has_root = ((long long)x * x + (long long)b * x + c) % p == 0;
                if (!has_root) {
                    ctx.irr_b = b;
                    ctx.irr_c = c;
                    found = true;
                }
            }
        if (!found) throw std::runtime_error("field_context: no irreducible quadratic found");
    }
    return ctx;
}

AffinePlane affine_plane(int q) {
    FieldContext ctx;
    if (is_prime(q)) {
        ctx = field_context(q, 1);
    } else {
        int root = int(std::lround(std::sqrt(double(q))));
        while (root * root > q) --root;
        while ((root + 1) * (root + 1) <= q) ++root;
        if (root * root != q || !is_prime(root))
            throw std::invalid_argument("affine_plane: order must be p or p^2 for a prime p");
        ctx = field_context(root, 2);
    }

    AffinePlane plane;
    plane.order = q;
    // slope classes: lines y = a x + b
    for (int a = 0; a < q; ++a) {
        std::vector<std::vector<int>> lines;
        for (int b = 0; b < q; ++b) {
            std::vector<int> line;
            for (int x = 0; x < q; ++x) {
                int y = ctx.add(ctx.mul(a, x), b);
                line.push_back(x * q + y);
            }
            std::sort(line.begin(), line.end());
            lines.push_back(std::move(line));
        }
        plane.classes.push_back(std::move(lines));
    }
    // vertical class: lines x = c
    {
        std::vector<std::vector<int>> lines;
        for (int c = 0; c < q; ++c) {
            std::vector<int> line;
            for (int y = 0; y < q; ++y) line.push_back(c * q + y);
            lines.push_back(std::move(line));
        }
        plane.classes.push_back(std::move(lines));
    }
    return plane;
}

PlaneCheck verify_plane(const AffinePlane& plane) {
    int m = plane.order;
    auto fail = [](std::string why) { return PlaneCheck{false, std::move(why)}; };
    if (m < 2) return fail("order below 2");
    if (int(plane.classes.size()) != m + 1) return fail("expected m+1 parallel classes");

    std::vector<Bitset> membership; // flattened line index -> point membership
    for (int i = 0; i < m + 1; ++i) {
        if (int(plane.classes[i].size()) != m) return fail("class " + std::to_string(i) + ": expected m lines");
        Bitset covered(m * m);
        for (int t = 0; t < m; ++t) {
            const auto& line = plane.classes[i][t];
            if (int(line.size()) != m) return fail("line size != m");
            Bitset mem(m * m);
            for (int pt : line) {
                if (pt < 0 || pt >= m * m) return fail("point out of range");
                if (mem.test(pt)) return fail("repeated point in a line");
                mem.set(pt);
                if (covered.test(pt)) return fail("class " + std::to_string(i) + ": lines overlap (not a partition)");
                covered.set(pt);
            }
            membership.push_back(std::move(mem));
        }
        if (covered.count() != m * m)
            return fail("class " + std::to_string(i) + ": does not cover the point set");
    }

    // lines from different classes meet exactly once
    int total = (m + 1) * m;
    for (int a = 0; a < total; ++a)
        for (int b = a + 1; b < total; ++b) {
            if (a / m == b / m) continue; // same class: partition already checked
            int meet = (membership[a] & membership[b]).count();
            if (meet != 1)
                return fail("lines " + std::to_string(a) + "," + std::to_string(b) + " meet " +
                            std::to_string(meet) + " times");
        }
    return PlaneCheck{true, ""};
}

} // namespace hadwiger
