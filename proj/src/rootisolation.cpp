#include "lne/rootisolation.hpp"

#include <algorithm>

#include "lne/errors.hpp"
#include "lne/polyarith.hpp"

namespace lne {

namespace {

using Dense = std::vector<Rat>;

void trim(Dense& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Dense derivative(const Dense& p) {
    Dense d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rat(static_cast<long>(i)));
    return d;
}

// Scale to coprime integer coefficients; positive rational scaling preserves
// signs, which is all Sturm counting needs.
void make_primitive(Dense& p) {
    Int num_gcd(0), den_lcm(1);
    for (const Rat& c : p) {
        num_gcd = gcd(num_gcd, c.num());
        den_lcm = lcm(den_lcm, c.den());
    }
    if (num_gcd == 0) return;
    Rat scale(den_lcm, num_gcd);
    for (Rat& c : p) c *= scale;
}

Dense remainder(Dense a, const Dense& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rat factor = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

Dense to_dense_univariate(const Poly& p) {
    if (p.vars().size() > 1) throw UsageError("expected a univariate polynomial");
    return p.univariate_coeffs();
}

Dense squarefree_dense(const Poly& p) {
    if (p.is_zero()) throw DegenerateInputError("root isolation of the zero polynomial");
    Poly sf = squarefree_part(p);
    Dense d = to_dense_univariate(sf);
    trim(d);
    return d;
}

Rat cauchy_bound(const Dense& p) {
    Rat max_ratio(0);
    for (size_t i = 0; i + 1 < p.size(); ++i)
        max_ratio = std::max(max_ratio, (p[i] / p.back()).abs());
    return Rat(1) + max_ratio;
}

struct Isolator {
    const SturmChain& chain;
    const Dense& poly;
    std::vector<RatInterval> out;
    int depth_cap = 256;

    void bisect(const Rat& lo, const Rat& hi, int count, int depth) {
        if (count == 0) return;
        if (depth > depth_cap) throw ConsistencyError("real root isolation exceeded depth cap");
        if (count == 1) {
            out.push_back({lo, hi});
            return;
        }
        Rat mid = (lo + hi) * Rat(1, 2);
        if (eval_at(poly, mid).is_zero()) {
            // Rational root exactly at the split point: emit it as a point
            // interval and recurse on both sides of a punctured gap.
            Rat gap = (hi - lo) * Rat(1, 1024);
            Rat a = mid - gap, b = mid + gap;
            while (eval_at(poly, a).is_zero()) a = (lo + a) * Rat(1, 2);
            while (eval_at(poly, b).is_zero()) b = (b + hi) * Rat(1, 2);
            out.push_back(RatInterval::point(mid));
            bisect(lo, a, chain.count_in(lo, a), depth + 1);
            bisect(b, hi, chain.count_in(b, hi), depth + 1);
            return;
        }
        int left = chain.count_in(lo, mid);
        bisect(lo, mid, left, depth + 1);
        bisect(mid, hi, count - left, depth + 1);
    }
};

// Real/imaginary split of p(a + i*b): returns (u, w) with
// p(a+ib) = u(a, b^2) + i*b*w(a, b^2); the second variable stands for b^2.
std::pair<Poly, Poly> real_imag_split(const Dense& p, Var avar, Var cvar) {
    Poly a = Poly::variable(avar);
    Poly re, im;  // polynomials in (avar, bvar) with bvar = cvar temporarily
    Poly b = Poly::variable(cvar);
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        Poly nre = re * a - im * b + Poly(*it);
        Poly nim = re * b + im * a;
        re = nre;
        im = nim;
    }
    // re has only even powers of b, im only odd ones; substitute b^2 -> c.
    auto halve = [&](const Poly& f, int parity) {
        Poly outp;
        for (const auto& [e, c] : f.terms()) {
            int ea = 0, eb = 0;
            for (size_t i = 0; i < f.vars().size(); ++i) {
                if (f.vars()[i] == avar) ea = e[i];
                if (f.vars()[i] == cvar) eb = e[i];
            }
            if ((eb & 1) != parity) throw ConsistencyError("parity violation in real/imag split");
            outp += Poly::monomial(c, {{avar, ea}, {cvar, (eb - parity) / 2}});
        }
        return outp;
    };
    return {halve(re, 0), halve(im, 1)};
}

}  // namespace

SturmChain::SturmChain(const Poly& p) {
    Dense d = squarefree_dense(p);
    make_primitive(d);
    chain_.push_back(d);
    if (d.size() <= 1) return;
    Dense d1 = derivative(d);
    make_primitive(d1);
    chain_.push_back(d1);
    while (chain_.back().size() > 1) {
        Dense r = remainder(chain_[chain_.size() - 2], chain_.back());
        if (r.empty()) break;  // cannot happen for squarefree input
        for (Rat& c : r) c = -c;
        make_primitive(r);
        chain_.push_back(std::move(r));
    }
}

int SturmChain::variations_at(const Rat& x) const {
    int variations = 0, prev = 0;
    for (const auto& f : chain_) {
        int s = eval_at(f, x).sign();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

std::vector<RatInterval> isolate_real_roots(const Poly& p) {
    SturmChain chain(p);
    const Dense& d = chain.squarefree_coeffs();
    if (d.size() <= 1) return {};
    Rat bound = cauchy_bound(d);
    int total = chain.count_in(-bound, bound);
    Isolator iso{chain, d, {}, 256};
    iso.bisect(-bound, bound, total, 0);
    std::sort(iso.out.begin(), iso.out.end(),
              [](const RatInterval& a, const RatInterval& b) { return a.lo < b.lo; });
    // Shrink until intervals are pairwise disjoint.
    bool again = true;
    while (again) {
        again = false;
        for (size_t i = 0; i + 1 < iso.out.size(); ++i) {
            if (iso.out[i].hi > iso.out[i + 1].lo) {
                iso.out[i] = refine_real_root(d, iso.out[i], iso.out[i].width() * Rat(1, 4));
                iso.out[i + 1] =
                    refine_real_root(d, iso.out[i + 1], iso.out[i + 1].width() * Rat(1, 4));
                again = true;
            }
        }
    }
    return iso.out;
}

RatInterval refine_real_root(const Dense& coeffs, RatInterval iv, const Rat& width) {
    if (iv.width().is_zero()) return iv;
    int slo = eval_at(coeffs, iv.lo).sign();
    if (slo == 0) return RatInterval::point(iv.lo);
    while (iv.width() > width) {
        Rat mid = iv.mid();
        int sm = eval_at(coeffs, mid).sign();
        if (sm == 0) return RatInterval::point(mid);
        if (sm == slo)
            iv.lo = mid;
        else
            iv.hi = mid;
    }
    return iv;
}

Box refine_box(const Dense& coeffs, Box box, const Rat& width) {
    Dense deriv = derivative(coeffs);
    int guard = 0;
    while (box.width() > width) {
        if (++guard > 128) throw ConsistencyError("box refinement stalled");
        Box d = eval_box(deriv, box);
        if (d.contains_zero())
            throw ConsistencyError("box refinement: derivative not bounded away from zero");
        Box mid = Box::point(box.re.mid(), box.im.mid());
        Box newton = mid - eval_box(coeffs, mid) / d;
        Box next = newton.intersection(box);
        if (!next.re.valid() || !next.im.valid())
            throw ConsistencyError("box refinement lost the root");
        // Outward rounding keeps rational denominators bounded.
        int bits = 8;
        Rat w = next.width();
        while (w < Rat(1, 1) && bits < 4096) {
            w *= Rat(2);
            bits += 1;
        }
        box = next.rounded_out(bits + 16).intersection(box);
    }
    return box;
}

std::vector<Box> isolate_complex_roots(const Poly& p, const Rat& width) {
    Poly sf = squarefree_part(p);
    Dense q = to_dense_univariate(sf);
    trim(q);
    if (q.size() <= 1) return {};
    int deg = static_cast<int>(q.size()) - 1;

    std::vector<Box> boxes;
    for (const RatInterval& iv : isolate_real_roots(sf))
        boxes.push_back({iv, RatInterval::point(Rat(0))});

    if (deg >= 2) {
        auto [ut, wt] = real_imag_split(q, Var::u, Var::v);
        // wt == 0 cannot happen for deg >= 1; for deg 1 there are no strictly
        // complex roots and we never reach this branch with deg < 2.
        Poly A = resultant_eliminate(ut, wt, Var::v);
        Poly C = resultant_eliminate(ut, wt, Var::u);
        if (A.is_zero() || C.is_zero())
            throw ConsistencyError("degenerate resultant in complex root isolation");

        std::vector<RatInterval> a_ivs = isolate_real_roots(A);
        SturmChain a_chain(A);
        std::vector<RatInterval> c_ivs;
        SturmChain c_chain(C);
        for (RatInterval iv : isolate_real_roots(C)) {
            // Only c > 0 yields strictly complex roots b = +-sqrt(c).
            while (iv.contains_zero() && !iv.width().is_zero())
                iv = refine_real_root(c_chain.squarefree_coeffs(), iv, iv.width() * Rat(1, 4));
            if (iv.lo.sign() > 0) c_ivs.push_back(iv);
        }

        Dense qderiv = derivative(q);
        for (const RatInterval& a0 : a_ivs) {
            for (const RatInterval& c0 : c_ivs) {
                RatInterval aiv = a0, civ = c0;
                bool accepted = false;
                for (int iter = 0; iter < 96; ++iter) {
                    RatInterval biv =
                        RatInterval(sqrt_enclosure(civ.lo, 40).lo, sqrt_enclosure(civ.hi, 40).hi);
                    Box X(aiv, biv);
                    if (!eval_box(q, X).contains_zero()) break;
                    Box d = eval_box(qderiv, X);
                    if (!d.contains_zero()) {
                        Box mid = Box::point(X.re.mid(), X.im.mid());
                        Box newton = mid - eval_box(q, mid) / d;
                        if (X.contains_box(newton)) {
                            boxes.push_back(newton);
                            accepted = true;
                            break;
                        }
                        if (!newton.intersects(X)) break;
                    }
                    aiv = refine_real_root(a_chain.squarefree_coeffs(), aiv,
                                           aiv.width() * Rat(1, 4));
                    civ = refine_real_root(c_chain.squarefree_coeffs(), civ,
                                           civ.width() * Rat(1, 4));
                    if (aiv.width().is_zero() && civ.width().is_zero()) {
                        // Exact rational candidate: decide by direct evaluation.
                        RatInterval bexact =
                            RatInterval(sqrt_enclosure(civ.lo, 60).lo, sqrt_enclosure(civ.hi, 60).hi);
                        Box XX(aiv, bexact);
                        if (eval_box(q, XX).contains_zero()) {
                            // sqrt may be irrational; certify via Newton on a
                            // slightly inflated box.
                            Box d2 = eval_box(qderiv, XX);
                            if (!d2.contains_zero()) {
                                Box mid = Box::point(XX.re.mid(), XX.im.mid());
                                Box newton = mid - eval_box(q, mid) / d2;
                                if (XX.contains_box(newton)) {
                                    boxes.push_back(newton);
                                    accepted = true;
                                }
                            }
                        }
                        break;
                    }
                }
                if (accepted) {
                    Box b = boxes.back();
                    boxes.push_back({b.re, -b.im});  // conjugate root
                }
            }
        }
    }

    if (static_cast<int>(boxes.size()) != deg)
        throw ConsistencyError("complex root count mismatch: found " +
                               std::to_string(boxes.size()) + " of " + std::to_string(deg));

    for (Box& b : boxes) {
        if (b.im.lo.is_zero() && b.im.hi.is_zero()) {
            RatInterval re = refine_real_root(q, b.re, width);
            b = Box(re, RatInterval::point(Rat(0)));
        } else {
            b = refine_box(q, b, width);
        }
    }
    // Shrink until pairwise disjoint, then order canonically.
    bool again = true;
    int guard = 0;
    while (again) {
        if (++guard > 64) throw ConsistencyError("complex root boxes failed to separate");
        again = false;
        for (size_t i = 0; i < boxes.size(); ++i)
            for (size_t j = i + 1; j < boxes.size(); ++j)
                if (boxes[i].intersects(boxes[j])) {
                    Rat w = std::min(boxes[i].width(), boxes[j].width()) * Rat(1, 4);
                    for (Box* b : {&boxes[i], &boxes[j]}) {
                        if (b->im.lo.is_zero() && b->im.hi.is_zero())
                            *b = Box(refine_real_root(q, b->re, w), RatInterval::point(Rat(0)));
                        else
                            *b = refine_box(q, *b, w);
                    }
                    again = true;
                }
    }
    std::sort(boxes.begin(), boxes.end(), [](const Box& a, const Box& b) {
        Rat ra = a.re.mid(), rb = b.re.mid();
        if (ra != rb) return ra < rb;
        return a.im.mid() < b.im.mid();
    });
    return boxes;
}

}  // namespace lne
