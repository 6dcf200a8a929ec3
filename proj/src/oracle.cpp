#include "motivic/oracle.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstring>
#include <limits>
#include <thread>
#include <unordered_map>

#include "motivic/errors.hpp"

namespace motivic {

bool is_prime(unsigned q) {
    if (q < 2) return false;
    for (unsigned d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// PrimeFieldMatrix (checked public type)
// ---------------------------------------------------------------------------

PrimeFieldMatrix::PrimeFieldMatrix(unsigned p, unsigned n) : p_(p), n_(n) {
    if (!is_prime(p)) throw contract_violation("PrimeFieldMatrix: p = " + std::to_string(p) + " is not prime");
    if (n < 1) throw contract_violation("PrimeFieldMatrix: dimension must be >= 1");
    entries_.assign(static_cast<std::size_t>(n) * n, 0);
}

PrimeFieldMatrix PrimeFieldMatrix::from_index(unsigned p, unsigned n, std::uint64_t index) {
    PrimeFieldMatrix m(p, n);
    for (std::size_t pos = m.entries_.size(); pos-- > 0;) {
        m.entries_[pos] = static_cast<std::uint8_t>(index % p);
        index /= p;
    }
    return m;
}

PrimeFieldMatrix operator*(const PrimeFieldMatrix& a, const PrimeFieldMatrix& b) {
    if (a.p_ != b.p_ || a.n_ != b.n_)
        throw contract_violation("matrix product: mismatched field or dimension");
    const unsigned n = a.n_, p = a.p_;
    PrimeFieldMatrix r(p, n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            unsigned acc = 0;
            for (unsigned k = 0; k < n; ++k) acc += unsigned(a.at(i, k)) * b.at(k, j);
            r.entries_[i * n + j] = static_cast<std::uint8_t>(acc % p);
        }
    return r;
}

bool PrimeFieldMatrix::commutes_with(const PrimeFieldMatrix& other) const {
    return (*this) * other == other * (*this);
}

bool PrimeFieldMatrix::is_nilpotent() const {
    PrimeFieldMatrix pw = *this;
    for (unsigned i = 1; i < n_; ++i) pw = pw * (*this);
    return std::all_of(pw.entries_.begin(), pw.entries_.end(), [](std::uint8_t v) { return v == 0; });
}

// ---------------------------------------------------------------------------
// Enumeration engine. Fixed-capacity matrices and F_p row reduction; the
// counting loops never allocate per element.
// ---------------------------------------------------------------------------

namespace {

constexpr unsigned kEngineMaxN = 5;

struct Ctx {
    unsigned p, n;
    std::array<std::uint8_t, 256> inv{}; // multiplicative inverses mod p
    Ctx(unsigned p_, unsigned n_) : p(p_), n(n_) {
        for (unsigned a = 1; a < p; ++a)
            for (unsigned b = 1; b < p; ++b)
                if (a * b % p == 1) {
                    inv[a] = static_cast<std::uint8_t>(b);
                    break;
                }
    }
};

using Mat = std::array<std::uint8_t, kEngineMaxN * kEngineMaxN>;
using Vec = std::array<std::uint8_t, kEngineMaxN>;

Mat mat_from_index(const Ctx& c, std::uint64_t idx) {
    Mat m{};
    for (unsigned pos = c.n * c.n; pos-- > 0;) {
        m[pos] = static_cast<std::uint8_t>(idx % c.p);
        idx /= c.p;
    }
    return m;
}

// Base-p odometer over the n^2 entries; false on wraparound.
bool mat_increment(const Ctx& c, Mat& m) {
    for (unsigned pos = c.n * c.n; pos-- > 0;) {
        if (++m[pos] < c.p) return true;
        m[pos] = 0;
    }
    return false;
}

Mat mat_mul(const Ctx& c, const Mat& a, const Mat& b) {
    Mat r{};
    for (unsigned i = 0; i < c.n; ++i)
        for (unsigned j = 0; j < c.n; ++j) {
            unsigned acc = 0;
            for (unsigned k = 0; k < c.n; ++k) acc += unsigned(a[i * c.n + k]) * b[k * c.n + j];
            r[i * c.n + j] = static_cast<std::uint8_t>(acc % c.p);
        }
    return r;
}

bool mats_commute(const Ctx& c, const Mat& a, const Mat& b) {
    for (unsigned i = 0; i < c.n; ++i)
        for (unsigned j = 0; j < c.n; ++j) {
            unsigned ab = 0, ba = 0;
            for (unsigned k = 0; k < c.n; ++k) {
                ab += unsigned(a[i * c.n + k]) * b[k * c.n + j];
                ba += unsigned(b[i * c.n + k]) * a[k * c.n + j];
            }
            if (ab % c.p != ba % c.p) return false;
        }
    return true;
}

bool mat_is_nilpotent(const Ctx& c, const Mat& a) {
    Mat pw = a;
    for (unsigned i = 1; i < c.n; ++i) pw = mat_mul(c, pw, a);
    return pw == Mat{};
}

Vec mat_vec(const Ctx& c, const Mat& a, const Vec& v) {
    Vec r{};
    for (unsigned i = 0; i < c.n; ++i) {
        unsigned acc = 0;
        for (unsigned k = 0; k < c.n; ++k) acc += unsigned(a[i * c.n + k]) * v[k];
        r[i] = static_cast<std::uint8_t>(acc % c.p);
    }
    return r;
}

// Reduced row echelon basis of a subspace of F_p^n, pivots ascending. The
// canonical key identifies the subspace uniquely.
struct Echelon {
    unsigned dim = 0;
    std::array<Vec, kEngineMaxN> rows{};
    std::array<std::int8_t, kEngineMaxN> piv{};

    bool insert(const Ctx& c, Vec v) {
        for (unsigned r = 0; r < dim; ++r) {
            unsigned f = v[static_cast<unsigned>(piv[r])];
            if (f == 0) continue;
            unsigned mul = c.p - f;
            for (unsigned j = 0; j < c.n; ++j)
                v[j] = static_cast<std::uint8_t>((v[j] + mul * rows[r][j]) % c.p);
        }
        int col = -1;
        for (unsigned j = 0; j < c.n; ++j)
            if (v[j]) {
                col = static_cast<int>(j);
                break;
            }
        if (col < 0) return false;
        unsigned s = c.inv[v[static_cast<unsigned>(col)]];
        if (s != 1)
            for (unsigned j = 0; j < c.n; ++j) v[j] = static_cast<std::uint8_t>(v[j] * s % c.p);
        for (unsigned r = 0; r < dim; ++r) {
            unsigned f = rows[r][static_cast<unsigned>(col)];
            if (f == 0) continue;
            unsigned mul = c.p - f;
            for (unsigned j = 0; j < c.n; ++j)
                rows[r][j] = static_cast<std::uint8_t>((rows[r][j] + mul * v[j]) % c.p);
        }
        unsigned pos = dim;
        while (pos > 0 && piv[pos - 1] > col) {
            rows[pos] = rows[pos - 1];
            piv[pos] = piv[pos - 1];
            --pos;
        }
        rows[pos] = v;
        piv[pos] = static_cast<std::int8_t>(col);
        ++dim;
        return true;
    }

    // Packs dim and the rows base p; fits in 64 bits whenever p^(n^2+1)
    // does, which the budget guard guarantees for every reachable scan.
    std::uint64_t key(const Ctx& c) const {
        std::uint64_t k = dim;
        for (unsigned r = 0; r < dim; ++r)
            for (unsigned j = 0; j < c.n; ++j) k = k * c.p + rows[r][j];
        return k;
    }
};

// Breadth-first Krylov closure: grow the span by applying each matrix to a
// spanning set until stable. The dimension grows every round, so at most n
// rounds run.
void close_under(const Ctx& c, Echelon& e, const Mat* mats, unsigned nmats) {
    bool grew = true;
    while (grew && e.dim < c.n) {
        grew = false;
        std::array<Vec, kEngineMaxN> snap = e.rows;
        unsigned sd = e.dim;
        for (unsigned r = 0; r < sd; ++r)
            for (unsigned m = 0; m < nmats; ++m)
                if (e.insert(c, mat_vec(c, mats[m], snap[r]))) grew = true;
    }
}

std::uint64_t upow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

// Number of ordered r-tuples of vectors generating F_p^n under the action
// of the given commuting matrices. Every vector's Krylov closure is an
// invariant subspace; a tuple generates iff the join of its members'
// closures is the full space, so the tuples are counted by a walk over the
// (small) lattice of arising invariant subspaces instead of one Krylov run
// per tuple. Equals the per-tuple scan exactly.
std::uint64_t generating_tuple_count(const Ctx& c, const Mat* mats, unsigned nmats, unsigned r) {
    const std::uint64_t V = upow(c.p, c.n);

    std::vector<Echelon> subs;
    std::unordered_map<std::uint64_t, unsigned> id_of;
    auto intern = [&](const Echelon& e) -> unsigned {
        auto [it, fresh] = id_of.try_emplace(e.key(c), static_cast<unsigned>(subs.size()));
        if (fresh) subs.push_back(e);
        return it->second;
    };

    const unsigned zero_id = intern(Echelon{});
    std::vector<unsigned> vclo(V);
    for (std::uint64_t vi = 0; vi < V; ++vi) {
        Vec v{};
        std::uint64_t x = vi;
        for (unsigned j = c.n; j-- > 0;) {
            v[j] = static_cast<std::uint8_t>(x % c.p);
            x /= c.p;
        }
        Echelon e{};
        if (e.insert(c, v)) close_under(c, e, mats, nmats);
        vclo[vi] = intern(e);
    }

    std::unordered_map<std::uint64_t, unsigned> join_memo;
    auto join = [&](unsigned s, unsigned cid) -> unsigned {
        if (cid == zero_id || s == cid) return s;
        if (s == zero_id) return cid;
        std::uint64_t mk = (static_cast<std::uint64_t>(s) << 32) | cid;
        auto it = join_memo.find(mk);
        if (it != join_memo.end()) return it->second;
        Echelon e = subs[s];
        Echelon other = subs[cid];
        for (unsigned rr = 0; rr < other.dim; ++rr) e.insert(c, other.rows[rr]);
        unsigned j = intern(e);
        join_memo.emplace(mk, j);
        return j;
    };

    std::vector<std::uint64_t> cnt(subs.size(), 0);
    cnt[zero_id] = 1;
    for (unsigned step = 0; step < r; ++step) {
        std::vector<std::uint64_t> nxt(subs.size(), 0);
        for (unsigned s = 0; s < cnt.size(); ++s) {
            if (cnt[s] == 0) continue;
            for (std::uint64_t vi = 0; vi < V; ++vi) {
                unsigned j = join(s, vclo[vi]);
                if (j >= nxt.size()) nxt.resize(subs.size(), 0);
                nxt[j] += cnt[s];
            }
        }
        nxt.resize(subs.size(), 0);
        cnt = std::move(nxt);
    }

    std::uint64_t total = 0;
    for (unsigned s = 0; s < cnt.size(); ++s)
        if (subs[s].dim == c.n) total += cnt[s];
    return total;
}

// ---------------------------------------------------------------------------
// Budget and parallel driving
// ---------------------------------------------------------------------------

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
        return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

std::uint64_t sat_pow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r = sat_mul(r, b);
    return r;
}

void check_budget(std::string_view space, std::uint64_t estimate, const OracleConfig& cfg) {
    if (estimate > cfg.work_budget)
        throw budget_exceeded("count " + std::string(space) + ": estimated " +
                                  std::to_string(estimate) + " evaluations exceed work budget " +
                                  std::to_string(cfg.work_budget),
                              estimate, cfg.work_budget);
}

void validate_q(unsigned q) {
    if (!is_prime(q)) throw contract_violation("q = " + std::to_string(q) + " is not prime");
}

void validate_engine_n(unsigned n) {
    if (n > kEngineMaxN)
        throw contract_violation("enumeration supports n <= " + std::to_string(kEngineMaxN));
}

// Subspace keys pack n^2 base-p digits plus the dimension into 64 bits.
void validate_key_packing(unsigned p, unsigned n) {
    std::uint64_t k = n + 1;
    for (unsigned i = 0; i < n * n; ++i) {
        if (k > std::numeric_limits<std::uint64_t>::max() / p)
            throw contract_violation("p = " + std::to_string(p) + ", n = " + std::to_string(n) +
                                     " exceeds the subspace-key range");
        k *= p;
    }
}

// Deterministic: partial sums of disjoint index ranges, added in range order.
std::uint64_t parallel_sum(std::uint64_t total, unsigned threads,
                           const std::function<std::uint64_t(std::uint64_t, std::uint64_t)>& fn) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    if (total < 2048) threads = 1; // not worth spawning
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(total, 1)));
    if (threads <= 1) return fn(0, total);
    const std::uint64_t chunk = (total + threads - 1) / threads;
    std::vector<std::uint64_t> parts(threads, 0);
    std::vector<std::thread> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        std::uint64_t b = std::min<std::uint64_t>(total, t * chunk);
        std::uint64_t e = std::min<std::uint64_t>(total, b + chunk);
        workers.emplace_back([&parts, &fn, t, b, e] { parts[t] = fn(b, e); });
    }
    for (auto& w : workers) w.join();
    std::uint64_t sum = 0;
    for (std::uint64_t v : parts) sum += v;
    return sum;
}

} // namespace

// ---------------------------------------------------------------------------
// Public counts
// ---------------------------------------------------------------------------

GroupoidCount GroupoidCount::of(Integer raw, Integer group) {
    Rational v(raw);
    v /= Rational(group);
    v.canonicalize();
    return GroupoidCount{std::move(raw), std::move(group), std::move(v)};
}

bool GroupoidCount::is_integral() const {
    return mpz_divisible_p(raw_count.get_mpz_t(), group_order.get_mpz_t()) != 0;
}

Integer gl_order(unsigned n, unsigned q) {
    Integer r(1), qn, qi;
    mpz_ui_pow_ui(qn.get_mpz_t(), q, n);
    for (unsigned i = 0; i < n; ++i) {
        mpz_ui_pow_ui(qi.get_mpz_t(), q, i);
        r *= (qn - qi);
    }
    return r;
}

std::uint64_t estimated_cost(std::string_view space, unsigned n, unsigned q, unsigned r) {
    const std::uint64_t scan = sat_pow(q, n * n);       // all matrices
    const std::uint64_t pair_scan = sat_pow(q, 2 * n * n);
    const std::uint64_t vecs = sat_pow(q, n);
    (void)r; // the subspace walk makes the r-dependence negligible
    if (space == "coh-a1" || space == "coh-a1-punctual") return scan;
    if (space == "coh-a2") return pair_scan;
    if (space == "coh-a2-punctual")
        return sat_mul(scan, 1 + sat_pow(q, n * n - n));
    if (space == "quot-a1" || space == "quot-a1-punctual") return sat_mul(scan, vecs);
    if (space == "quot-a2")
        return pair_scan + sat_mul(2, sat_mul(sat_pow(q, n * n + n), vecs));
    if (space == "quot-a2-punctual")
        return sat_mul(scan, 1 + sat_pow(q, n * n - n)) +
               sat_mul(2, sat_mul(sat_pow(q, n * n - n + n), vecs));
    throw contract_violation("unknown space '" + std::string(space) + "'");
}

GroupoidCount count_coh_a1(unsigned n, unsigned q, const OracleConfig& cfg) {
    validate_q(q);
    if (n > cfg.coh_a1_n_bound)
        throw budget_exceeded("count coh-a1: n = " + std::to_string(n) + " exceeds bound " +
                                  std::to_string(cfg.coh_a1_n_bound),
                              sat_pow(q, n * n), cfg.work_budget);
    Integer raw;
    mpz_ui_pow_ui(raw.get_mpz_t(), q, n * n);
    return GroupoidCount::of(std::move(raw), gl_order(n, q));
}

GroupoidCount count_coh_a2(unsigned n, unsigned q, const OracleConfig& cfg) {
    validate_q(q);
    if (n == 0) return GroupoidCount::of(1, 1);
    validate_engine_n(n);
    check_budget("coh-a2", estimated_cost("coh-a2", n, q), cfg);
    const Ctx c(q, n);
    const std::uint64_t M = upow(q, n * n);
    std::uint64_t raw = parallel_sum(M, cfg.threads, [&](std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t cnt = 0;
        Mat a = mat_from_index(c, lo);
        for (std::uint64_t ia = lo; ia < hi; ++ia) {
            Mat b{};
            do {
                if (mats_commute(c, a, b)) ++cnt;
            } while (mat_increment(c, b));
            mat_increment(c, a);
        }
        return cnt;
    });
    return GroupoidCount::of(Integer(static_cast<unsigned long>(raw)), gl_order(n, q));
}

GroupoidCount count_nilpotent_coh(unsigned d, unsigned n, unsigned q, const OracleConfig& cfg) {
    validate_q(q);
    if (d != 1 && d != 2) throw contract_violation("count_nilpotent_coh: d must be 1 or 2");
    if (n == 0) return GroupoidCount::of(1, 1);
    validate_engine_n(n);
    const char* space = d == 1 ? "coh-a1-punctual" : "coh-a2-punctual";
    check_budget(space, estimated_cost(space, n, q), cfg);
    const Ctx c(q, n);
    const std::uint64_t M = upow(q, n * n);
    std::uint64_t raw = parallel_sum(M, cfg.threads, [&](std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t cnt = 0;
        Mat a = mat_from_index(c, lo);
        for (std::uint64_t ia = lo; ia < hi; ++ia) {
            if (mat_is_nilpotent(c, a)) {
                if (d == 1) {
                    ++cnt;
                } else {
                    Mat b{};
                    do {
                        if (mats_commute(c, a, b) && mat_is_nilpotent(c, b)) ++cnt;
                    } while (mat_increment(c, b));
                }
            }
            mat_increment(c, a);
        }
        return cnt;
    });
    return GroupoidCount::of(Integer(static_cast<unsigned long>(raw)), gl_order(n, q));
}

namespace {

GroupoidCount count_quot_impl(unsigned d, unsigned r, unsigned n, unsigned q, bool punctual,
                              const OracleConfig& cfg) {
    validate_q(q);
    if (r < 1) throw contract_violation("quot count: r must be >= 1");
    if (n == 0) return GroupoidCount::of(1, 1);
    validate_engine_n(n);
    validate_key_packing(q, n);
    std::string space = std::string("quot-a") + (d == 1 ? "1" : "2") + (punctual ? "-punctual" : "");
    check_budget(space, estimated_cost(space, n, q, r), cfg);
    const Ctx c(q, n);
    const std::uint64_t M = upow(q, n * n);
    std::uint64_t raw = parallel_sum(M, cfg.threads, [&](std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t cnt = 0;
        Mat a = mat_from_index(c, lo);
        for (std::uint64_t ia = lo; ia < hi; ++ia) {
            if (!punctual || mat_is_nilpotent(c, a)) {
                if (d == 1) {
                    cnt += generating_tuple_count(c, &a, 1, r);
                } else {
                    Mat pair[2];
                    pair[0] = a;
                    Mat b{};
                    do {
                        if (mats_commute(c, a, b) && (!punctual || mat_is_nilpotent(c, b))) {
                            pair[1] = b;
                            cnt += generating_tuple_count(c, pair, 2, r);
                        }
                    } while (mat_increment(c, b));
                }
            }
            mat_increment(c, a);
        }
        return cnt;
    });
    return GroupoidCount::of(Integer(static_cast<unsigned long>(raw)), gl_order(n, q));
}

} // namespace

GroupoidCount count_quot_a1(unsigned r, unsigned n, unsigned q, const OracleConfig& cfg) {
    return count_quot_impl(1, r, n, q, false, cfg);
}
GroupoidCount count_quot_a2(unsigned r, unsigned n, unsigned q, const OracleConfig& cfg) {
    return count_quot_impl(2, r, n, q, false, cfg);
}
GroupoidCount count_quot_a1_punctual(unsigned r, unsigned n, unsigned q, const OracleConfig& cfg) {
    return count_quot_impl(1, r, n, q, true, cfg);
}
GroupoidCount count_quot_a2_punctual(unsigned r, unsigned n, unsigned q, const OracleConfig& cfg) {
    return count_quot_impl(2, r, n, q, true, cfg);
}

GroupoidCount count_coh_a1_two_point_stratum(unsigned q, const OracleConfig& cfg) {
    validate_q(q);
    check_budget("coh-a1", sat_pow(q, 4), cfg);
    const Ctx c(q, 2);
    const std::uint64_t M = upow(q, 4);
    // The characteristic polynomial x^2 - tr x + det is squarefree iff
    // tr != 0 in characteristic 2, and iff tr^2 - 4 det != 0 otherwise.
    std::uint64_t raw = parallel_sum(M, cfg.threads, [&](std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t cnt = 0;
        Mat a = mat_from_index(c, lo);
        for (std::uint64_t ia = lo; ia < hi; ++ia) {
            unsigned tr = (unsigned(a[0]) + a[3]) % q;
            unsigned det = (unsigned(a[0]) * a[3] % q + q - unsigned(a[1]) * a[2] % q) % q;
            bool squarefree = (q == 2) ? tr != 0 : (tr * tr % q + q - 4 * det % q) % q != 0;
            if (squarefree) ++cnt;
            mat_increment(c, a);
        }
        return cnt;
    });
    return GroupoidCount::of(Integer(static_cast<unsigned long>(raw)), gl_order(2, q));
}

bool tuple_generates(std::span<const PrimeFieldMatrix> mats,
                     std::span<const std::vector<std::uint8_t>> vectors) {
    if (mats.empty()) throw contract_violation("tuple_generates: no matrices");
    const unsigned p = mats[0].p(), n = mats[0].n();
    validate_engine_n(n);
    const Ctx c(p, n);
    std::vector<Mat> ms;
    for (const auto& m : mats) {
        if (m.p() != p || m.n() != n)
            throw contract_violation("tuple_generates: mixed fields or dimensions");
        Mat mm{};
        std::copy(m.entries().begin(), m.entries().end(), mm.begin());
        ms.push_back(mm);
    }
    Echelon e{};
    for (const auto& v : vectors) {
        if (v.size() != n) throw contract_violation("tuple_generates: vector length != n");
        Vec vv{};
        for (unsigned j = 0; j < n; ++j) vv[j] = static_cast<std::uint8_t>(v[j] % p);
        e.insert(c, vv);
    }
    close_under(c, e, ms.data(), static_cast<unsigned>(ms.size()));
    return e.dim == n;
}

Integer enumerate_matrix_count(unsigned n, unsigned q,
                               const std::function<bool(const PrimeFieldMatrix&)>& pred,
                               const OracleConfig& cfg) {
    validate_q(q);
    validate_engine_n(n);
    check_budget("coh-a1", sat_pow(q, n * n), cfg);
    const std::uint64_t M = upow(q, n * n);
    std::uint64_t cnt = 0;
    for (std::uint64_t i = 0; i < M; ++i)
        if (pred(PrimeFieldMatrix::from_index(q, n, i))) ++cnt;
    return Integer(static_cast<unsigned long>(cnt));
}

CountRecord run_count(std::string_view space, unsigned n, unsigned q, std::optional<unsigned> r,
                      const OracleConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    GroupoidCount gc;
    if (space == "coh-a1") {
        gc = count_coh_a1(n, q, cfg);
    } else if (space == "coh-a2") {
        gc = count_coh_a2(n, q, cfg);
    } else if (space == "coh-a1-punctual") {
        gc = count_nilpotent_coh(1, n, q, cfg);
    } else if (space == "coh-a2-punctual") {
        gc = count_nilpotent_coh(2, n, q, cfg);
    } else if (space == "quot-a1") {
        gc = count_quot_a1(r.value_or(1), n, q, cfg);
    } else if (space == "quot-a2") {
        gc = count_quot_a2(r.value_or(1), n, q, cfg);
    } else if (space == "quot-a1-punctual") {
        gc = count_quot_a1_punctual(r.value_or(1), n, q, cfg);
    } else if (space == "quot-a2-punctual") {
        gc = count_quot_a2_punctual(r.value_or(1), n, q, cfg);
    } else {
        throw contract_violation("unknown space '" + std::string(space) + "'");
    }
    auto t1 = std::chrono::steady_clock::now();
    CountRecord rec;
    rec.space = std::string(space);
    rec.n = n;
    rec.q = q;
    rec.r = r;
    rec.count = std::move(gc);
    rec.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return rec;
}

} // namespace motivic
