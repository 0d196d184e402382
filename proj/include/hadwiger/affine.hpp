#pragma once

#include <string>
#include <vector>

namespace hadwiger {

/// GF(p) or GF(p^2) with elements encoded as integers 0..q-1. For degree 2 the
/// element a + b*alpha is encoded a + b*p, with alpha a root of the
/// lexicographically smallest monic irreducible x^2 + bx + c over GF(p).
struct FieldContext {
    int p = 0;
    int e = 1;
    int q = 0;
    int irr_b = 0; // degree-2 only
    int irr_c = 0;

    int add(int x, int y) const;
    int neg(int x) const;
    int mul(int x, int y) const;
    int inv(int x) const; // throws on zero
};

bool is_prime(int p);

/// Builds GF(p^e) for prime p and e in {1, 2}.
FieldContext field_context(int p, int e);

/// Affine plane of order m: m^2 points, m+1 parallel classes of m lines each.
/// Point (x, y) over GF(m)^2 is encoded x*m + y. Classes 0..m-1 hold the lines
/// of slope a (indexed by intercept); the last class holds the verticals.
struct AffinePlane {
    int order = 0;
    std::vector<std::vector<std::vector<int>>> classes; // classes[i][t] = sorted point list
};

/// Requires q prime or the square of a prime.
AffinePlane affine_plane(int q);

struct PlaneCheck {
    bool ok = false;
    std::string violation; // empty when ok
    explicit operator bool() const { return ok; }
};

/// Exhaustively checks the partition property of each parallel class and the
/// one-point intersection of lines from different classes.
PlaneCheck verify_plane(const AffinePlane& plane);

} // namespace hadwiger
