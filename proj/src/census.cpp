#include "crmoser/census.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <random>
#include <thread>

namespace crmoser {

namespace {

// std::seed_seq and mt19937_64 are fully specified, distributions are not, so draws use plain modulo.
class Rng {
public:
    Rng(std::uint64_t seed, std::uint64_t index) {
        std::seed_seq seq{std::uint32_t(seed), std::uint32_t(seed >> 32), std::uint32_t(index), std::uint32_t(index >> 32)};
        engine_.seed(seq);
    }
    std::size_t below(std::size_t k) { return std::size_t(engine_() % k); }
    std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
    bool coin() { return below(2) == 0; }

private:
    std::mt19937_64 engine_;
};

FormKind census_kind(const CensusConfig& c) { return c.m == 0 ? FormKind::Diagonal : FormKind::Antidiagonal; }

Rational draw(Rng& rng, const CensusConfig& c) { return c.pool[rng.below(c.pool.size())]; }

// Random split of total among n slots.
void spread(Rng& rng, std::size_t n, unsigned total, Monomial& mono, bool bar) {
    std::vector<unsigned> e(n, 0);
    for (unsigned i = 0; i < total; ++i) ++e[rng.below(n)];
    for (std::size_t a = 0; a < n; ++a) {
        if (bar)
            mono.set_zbar(a, e[a]);
        else
            mono.set_z(a, e[a]);
    }
}

Poly random_terms(Rng& rng, const CensusConfig& c) {
    const std::size_t n = c.n;
    const unsigned w = c.max_weight;
    Poly f(n);
    std::size_t count = rng.between(1, 3);
    for (std::size_t t = 0; t < count; ++t) {
        unsigned k = unsigned(rng.between(2, w - 2));
        unsigned l = unsigned(rng.between(2, w - k));
        unsigned r = unsigned(rng.between(0, (w - k - l) / 2));
        Monomial mono;
        spread(rng, n, k, mono, false);
        spread(rng, n, l, mono, true);
        mono.set_u(r);
        GaussianRational coef(draw(rng, c), rng.coin() ? Rational(0) : draw(rng, c));
        if (mono == mono.swapped()) coef = GaussianRational(coef.re());
        Poly p = Poly::monomial(n, mono, coef);
        f += mono == mono.swapped() ? p : p + p.conj();
    }
    return f;
}

Poly form_and_u(Rng& rng, const CensusConfig& c, const Poly& q) {
    Poly f(c.n);
    std::size_t count = rng.between(1, 2);
    for (std::size_t t = 0; t < count; ++t) {
        unsigned k = unsigned(rng.between(4, c.max_weight / 2));
        unsigned r = unsigned(rng.between(0, (c.max_weight - 2 * k) / 2));
        f += pow(q, k).mul_u_power(r) * GaussianRational(draw(rng, c));
    }
    return f;
}

// u^r |z_j|^{2p} <z,z>^q with j = 1 (definite) or j = n (indefinite).
Poly model_family(Rng& rng, const CensusConfig& c, const Poly& q) {
    const std::size_t n = c.n;
    const std::size_t j = c.m == 0 ? 0 : n - 1;
    const unsigned min_pq = c.m == 0 ? 4 : 2;
    Poly f(n);
    std::size_t count = rng.between(1, 2);
    for (std::size_t t = 0; t < count; ++t) {
        unsigned p = unsigned(rng.between(1, c.max_weight / 2));
        unsigned lo_q = p >= min_pq ? 0 : min_pq - p;
        if (2 * (p + lo_q) > c.max_weight) continue;
        unsigned qq = unsigned(rng.between(lo_q, c.max_weight / 2 - p));
        unsigned r = unsigned(rng.between(0, (c.max_weight - 2 * (p + qq)) / 2));
        Monomial mono;
        mono.set_z(j, p);
        mono.set_zbar(j, p);
        f += (Poly::monomial(n, mono, 1) * pow(q, qq)).mul_u_power(r) * GaussianRational(draw(rng, c));
    }
    return f;
}

CMatrix random_pseudounitary(Rng& rng, const HermitianForm& form) {
    auto basis = u_basis(form);
    for (;;) {
        CMatrix x(form.n(), form.n());
        for (const auto& b : basis) {
            int k = int(rng.between(0, 4)) - 2;
            if (k != 0) x += b.matrix() * GaussianRational(Rational(k, 2));
        }
        try {
            return cayley(x);
        } catch (const std::domain_error&) {
        }
    }
}

bool acceptable(const HermitianForm& form, const Poly& f, unsigned max_weight) {
    if (f.is_zero()) return false;
    Hypersurface s(form, trusted_real(f), max_weight);
    return check_normal_form(s).passed();
}

}  // namespace

std::string to_string(SampleMode mode) {
    switch (mode) {
        case SampleMode::RandomTerms: return "random_terms";
        case SampleMode::FormAndU: return "form_and_u";
        case SampleMode::ModelFamily: return "model_family";
        case SampleMode::Rotated: return "rotated";
        case SampleMode::Mixed: return "mixed";
    }
    return "";
}

Hypersurface census_surface(const CensusConfig& config, std::size_t index, SampleMode* mode_out, unsigned* rejected_out) {
    if (config.max_weight < 8) throw std::invalid_argument("census needs max_weight >= 8");
    if (config.pool.empty()) throw std::invalid_argument("census needs a non-empty coefficient pool");
    HermitianForm form = standard_form(config.n, config.m, census_kind(config));
    const Poly q = inner_poly(form).poly();
    Rng rng(config.seed, index);

    static constexpr SampleMode kModes[] = {SampleMode::RandomTerms, SampleMode::RandomTerms, SampleMode::ModelFamily,
                                            SampleMode::ModelFamily, SampleMode::FormAndU,    SampleMode::Rotated,
                                            SampleMode::Mixed};
    SampleMode mode = kModes[rng.below(std::size(kModes))];

    unsigned rejected = 0;
    Poly f(config.n);
    for (;;) {
        switch (mode) {
            case SampleMode::RandomTerms: f = random_terms(rng, config); break;
            case SampleMode::FormAndU: f = form_and_u(rng, config, q); break;
            case SampleMode::ModelFamily: f = model_family(rng, config, q); break;
            case SampleMode::Rotated: {
                Poly base = rng.coin() ? model_family(rng, config, q) : random_terms(rng, config);
                f = substitute_linear(base, random_pseudounitary(rng, form), Rational(1));
                break;
            }
            case SampleMode::Mixed: f = random_terms(rng, config) + form_and_u(rng, config, q); break;
        }
        if (acceptable(form, f, config.max_weight)) break;
        if (++rejected >= config.max_attempts) {
            // always in normal form
            mode = SampleMode::FormAndU;
        }
    }
    if (mode_out) *mode_out = mode;
    if (rejected_out) *rejected_out = rejected;
    return Hypersurface(std::move(form), trusted_real(std::move(f)), config.max_weight);
}

CensusResult run_census(const CensusConfig& config) {
    CensusResult out;
    out.config = config;
    out.samples.resize(config.samples);

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;) {
            std::size_t i = next++;
            if (i >= config.samples) return;
            try {
                CensusSample& s = out.samples[i];
                s.index = i;
                Hypersurface surface = census_surface(config, i, &s.mode, &s.rejected);
                s.result = classify(surface);
                s.F = surface.F().poly();
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = config.samples;
            }
        }
    };
    unsigned threads = std::max(1u, config.threads);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    for (const auto& s : out.samples) {
        if (!s.result.gap_ok) ++out.gap_violations;
        if (s.result.function_of_form) ++out.positive_controls;
        out.rejected += s.rejected;
        ++out.dim_histogram[s.result.dim];
        ++out.case_counts[to_string(s.result.label)];
    }
    return out;
}

Json census_to_json(const CensusResult& result, bool include_surfaces) {
    const auto& c = result.config;
    Json pool = Json::array();
    for (const auto& p : c.pool) pool.push_back(to_json(p));
    Json hist = Json::object();
    for (const auto& [dim, count] : result.dim_histogram) hist[std::to_string(dim)] = count;
    Json cases = Json::object();
    for (const auto& [name, count] : result.case_counts) cases[name] = count;
    Json samples = Json::array();
    for (const auto& s : result.samples) {
        Json e{{"index", s.index}, {"mode", to_string(s.mode)}, {"rejected", s.rejected}};
        e.update(classification_to_json(s.result));
        if (include_surfaces) e["F"] = poly_to_json(s.F);
        samples.push_back(e);
    }
    return Json{{"n", c.n},
                {"m", c.m},
                {"samples", c.samples},
                {"seed", c.seed},
                {"max_weight", c.max_weight},
                {"pool", pool},
                {"gap_violations", result.gap_violations},
                {"positive_controls", result.positive_controls},
                {"rejected_draws", result.rejected},
                {"dim_histogram", hist},
                {"cases", cases},
                {"results", samples}};
}

}  // namespace crmoser
