#include "grouplin/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <limits>
#include <map>
#include <mutex>
#include <random>
#include <thread>

#include <json.hpp>

namespace grouplin {

using nlohmann::json;

std::string to_string(Objective o) {
    switch (o) {
        case Objective::min_apn_sum: return "min_apn_sum";
        case Objective::min_spectral_sum: return "min_spectral_sum";
        case Objective::min_max_nonlinearity: return "min_max_nonlinearity";
        case Objective::find_bent: return "find_bent";
        case Objective::coincidence: return "coincidence";
    }
    return "?";
}

Objective parse_objective(const std::string& s) {
    for (auto o : {Objective::min_apn_sum, Objective::min_spectral_sum,
                   Objective::min_max_nonlinearity, Objective::find_bent, Objective::coincidence})
        if (to_string(o) == s) return o;
    throw SearchError("unknown objective '" + s + "'");
}

std::uint64_t default_space_ceiling() {
    if (const char* env = std::getenv("GROUPLIN_SPACE_CEILING")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0') return v;
    }
    return kDefaultSpaceCeiling;
}

SpaceTooLarge::SpaceTooLarge(std::uint64_t space, std::uint64_t ceiling)
    : SearchError("function space of " + std::to_string(space) +
                  " functions exceeds the exhaustive ceiling of " + std::to_string(ceiling) +
                  "; use random mode (--random --samples N --seed S) or raise "
                  "GROUPLIN_SPACE_CEILING"),
      space_(space), ceiling_(ceiling) {}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t function_space_size(std::size_t domain_order, std::size_t codomain_order,
                                  bool reduction) {
    const std::size_t exponent = reduction && domain_order > 0 ? domain_order - 1 : domain_order;
    std::uint64_t size = 1;
    for (std::size_t i = 0; i < exponent; ++i) {
        if (codomain_order != 0 &&
            size > std::numeric_limits<std::uint64_t>::max() / codomain_order)
            return std::numeric_limits<std::uint64_t>::max();
        size *= codomain_order;
    }
    return size;
}

// ---------------------------------------------------------------------------
// Enumeration

FunctionEnumerator::FunctionEnumerator(const FiniteGroup& domain, const FiniteGroup& codomain,
                                       bool reduction)
    : n_(codomain.order()), m_(domain.order()) {
    if (reduction) {
        pinned_ = domain.identity();
        pinned_value_ = codomain.identity();
    }
    for (std::size_t p = 0; p < m_; ++p)
        if (!pinned_ || p != *pinned_) free_.push_back(p);
    prefix_ = std::min<std::size_t>(2, free_.size());
    units_ = 1;
    for (std::size_t i = 0; i < prefix_; ++i) units_ *= n_;
    size_ = function_space_size(m_, n_, reduction);
}

Images FunctionEnumerator::unit_start(std::size_t u) const {
    Images images(m_, 0);
    if (pinned_) images[*pinned_] = pinned_value_;
    for (std::size_t i = prefix_; i-- > 0;) {
        images[free_[i]] = static_cast<Element>(u % n_);
        u /= n_;
    }
    return images;
}

void FunctionEnumerator::for_each_in_unit(std::size_t u,
                                          const std::function<bool(const Images&)>& visit) const {
    Images images = unit_start(u);
    const std::size_t first = prefix_, last = free_.size();
    for (;;) {
        if (!visit(images)) return;
        std::size_t p = last;
        while (p > first) {
            Element& x = images[free_[p - 1]];
            if (x + 1 < n_) {
                ++x;
                break;
            }
            x = 0;
            --p;
        }
        if (p == first) return;
    }
}

void FunctionEnumerator::for_each(const std::function<bool(const Images&)>& visit) const {
    bool go = true;
    for (std::size_t u = 0; u < units_ && go; ++u)
        for_each_in_unit(u, [&](const Images& f) { return go = visit(f); });
}

namespace {

// ---------------------------------------------------------------------------
// Hot-loop evaluation of one function

struct Needs {
    bool apn = false;
    bool spectral_sum = false;
    bool max = false;
    bool bent = false;
    bool coincidence = false;
    bool blocks() const { return spectral_sum || max || bent || coincidence; }
    bool bent_only() const { return bent && !apn && !spectral_sum && !max && !coincidence; }
};

struct SpectralValues {
    double fourth = 0;
    double max_sq = 0;
    bool bent = false;
};

// ρ(D_f) for the irreps of K × N nonprincipal on N, maintained incrementally
// as images change. Irreps principal on N contribute only ρ0(D_f) = m.
class Evaluator {
public:
    Evaluator(const FiniteGroup& k, const FiniteGroup& n, const IrrepSet* dual, bool blocks,
              double tolerance)
        : m_(k.order()), n_(n.order()), tol_(tolerance),
          k_mul_(k.mul_table().begin(), k.mul_table().end()),
          n_mul_(n.mul_table().begin(), n.mul_table().end()),
          n_inv_(n.inv_table().begin(), n.inv_table().end()), counts_(n_, 0) {
        if (!blocks) return;
        const auto& layout = *dual->layout();
        for (std::size_t i = 0; i < dual->size(); ++i) {
            if (!dual->nonprincipal_on_right(i)) continue;
            const Irrep& r = (*dual)[i];
            Active a;
            a.dim = r.dim;
            a.area = r.dim * r.dim;
            a.mat_offset = mats_.size();
            a.block_offset = block_size_;
            a.gamma = bent_gamma(m_, n_, layout.left_count, layout.right_count, r.dim);
            for (const auto& mat : r.matrices)
                mats_.insert(mats_.end(), mat.data().begin(), mat.data().end());
            block_size_ += a.area;
            active_.push_back(a);
        }
        blocks_.assign(block_size_, Complex{});
        const double md = static_cast<double>(m_);
        principal_fourth_ = md * md * md * md;
    }

    void reset(const Images& f) {
        std::fill(blocks_.begin(), blocks_.end(), Complex{});
        for (std::size_t g = 0; g < m_; ++g) add(g, f[g]);
    }

    void change(std::size_t g, Element from, Element to) {
        const std::size_t from_idx = g * n_ + from, to_idx = g * n_ + to;
        for (const Active& a : active_) {
            const Complex* src_to = mats_.data() + a.mat_offset + to_idx * a.area;
            const Complex* src_from = mats_.data() + a.mat_offset + from_idx * a.area;
            Complex* dst = blocks_.data() + a.block_offset;
            for (std::size_t i = 0; i < a.area; ++i) dst[i] += src_to[i] - src_from[i];
        }
    }

    std::uint64_t apn(const Images& f) {
        // Row a = 1_K is δ(1, 1) = m.
        std::uint64_t s = std::uint64_t{m_} * m_;
        for (std::size_t a = 1; a < m_; ++a) {
            const Element* row = k_mul_.data() + a * m_;
            for (std::size_t g = 0; g < m_; ++g) {
                const Element b = n_mul_[f[row[g]] * n_ + n_inv_[f[g]]];
                s += 2 * std::uint64_t{counts_[b]++} + 1;
            }
            std::fill(counts_.begin(), counts_.end(), 0);
        }
        return s;
    }

    SpectralValues spectral() const {
        SpectralValues v;
        v.fourth = principal_fourth_;
        v.bent = true;
        for (const Active& a : active_) {
            const Complex* b = blocks_.data() + a.block_offset;
            double sq = 0;
            for (std::size_t i = 0; i < a.area; ++i) sq += std::norm(b[i]);
            const double dim = static_cast<double>(a.dim);
            v.fourth += dim * sq * sq;
            v.max_sq = std::max(v.max_sq, dim * sq);
            if (std::abs(sq - a.gamma) > tol_) v.bent = false;
        }
        return v;
    }

private:
    struct Active {
        std::size_t dim, area, mat_offset, block_offset;
        double gamma;
    };

    void add(std::size_t g, Element y) {
        const std::size_t idx = g * n_ + y;
        for (const Active& a : active_) {
            const Complex* src = mats_.data() + a.mat_offset + idx * a.area;
            Complex* dst = blocks_.data() + a.block_offset;
            for (std::size_t i = 0; i < a.area; ++i) dst[i] += src[i];
        }
    }

    std::size_t m_, n_;
    double tol_;
    std::vector<Element> k_mul_, n_mul_, n_inv_;
    std::vector<std::uint32_t> counts_;
    std::vector<Active> active_;
    std::vector<Complex> mats_;
    std::vector<Complex> blocks_;
    std::size_t block_size_ = 0;
    double principal_fourth_ = 0;
};

// ---------------------------------------------------------------------------
// Best-seen state of one work unit; merged in unit order.

bool lex_less(const Images& a, const Images& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

struct Accumulator {
    std::uint64_t scanned = 0;

    bool has_apn = false;
    std::uint64_t apn = 0;
    Images apn_witness;

    bool has_spec = false;
    double spec = 0;
    Images spec_witness;

    bool has_max = false;
    double max_sq = 0;
    std::uint64_t max_count = 0;
    std::uint64_t among_apn = 0;
    double among_spec = 0;
    Images max_witness;

    bool bent = false;
    Images bent_witness;

    void offer_apn(std::uint64_t v, const Images& f) {
        if (!has_apn || v < apn || (v == apn && lex_less(f, apn_witness))) {
            has_apn = true;
            apn = v;
            apn_witness = f;
        }
    }

    void offer_spec(double v, const Images& f, double tol) {
        if (!has_spec || v < spec - tol || (std::abs(v - spec) <= tol && lex_less(f, spec_witness))) {
            has_spec = true;
            spec = v;
            spec_witness = f;
        }
    }

    void offer_max(double v, std::uint64_t a, double s, const Images& f, double tol) {
        if (!has_max || v < max_sq - tol) {
            has_max = true;
            max_sq = v;
            max_count = 1;
            among_apn = a;
            among_spec = s;
            max_witness = f;
        } else if (std::abs(v - max_sq) <= tol) {
            ++max_count;
            among_apn = std::min(among_apn, a);
            among_spec = std::min(among_spec, s);
            if (lex_less(f, max_witness)) {
                max_sq = v;
                max_witness = f;
            }
        }
    }

    void offer_bent(const Images& f) {
        if (!bent || lex_less(f, bent_witness)) {
            bent = true;
            bent_witness = f;
        }
    }

    void merge(const Accumulator& o, double tol) {
        scanned += o.scanned;
        if (o.has_apn) offer_apn(o.apn, o.apn_witness);
        if (o.has_spec) offer_spec(o.spec, o.spec_witness, tol);
        if (o.has_max) {
            if (!has_max || o.max_sq < max_sq - tol) {
                has_max = true;
                max_sq = o.max_sq;
                max_count = o.max_count;
                among_apn = o.among_apn;
                among_spec = o.among_spec;
                max_witness = o.max_witness;
            } else if (std::abs(o.max_sq - max_sq) <= tol) {
                max_count += o.max_count;
                among_apn = std::min(among_apn, o.among_apn);
                among_spec = std::min(among_spec, o.among_spec);
                if (lex_less(o.max_witness, max_witness)) {
                    max_sq = o.max_sq;
                    max_witness = o.max_witness;
                }
            }
        }
        if (o.bent) offer_bent(o.bent_witness);
    }
};

json to_json(const Accumulator& a) {
    json j;
    j["scanned"] = a.scanned;
    if (a.has_apn) j["apn"] = {{"value", a.apn}, {"witness", a.apn_witness}};
    if (a.has_spec) j["spec"] = {{"value", a.spec}, {"witness", a.spec_witness}};
    if (a.has_max)
        j["max"] = {{"squared", a.max_sq},       {"count", a.max_count},
                    {"among_apn", a.among_apn},  {"among_spec", a.among_spec},
                    {"witness", a.max_witness}};
    if (a.bent) j["bent"] = {{"witness", a.bent_witness}};
    return j;
}

Accumulator accumulator_from_json(const json& j) {
    Accumulator a;
    a.scanned = j.at("scanned").get<std::uint64_t>();
    if (j.contains("apn")) {
        a.has_apn = true;
        a.apn = j["apn"].at("value").get<std::uint64_t>();
        a.apn_witness = j["apn"].at("witness").get<Images>();
    }
    if (j.contains("spec")) {
        a.has_spec = true;
        a.spec = j["spec"].at("value").get<double>();
        a.spec_witness = j["spec"].at("witness").get<Images>();
    }
    if (j.contains("max")) {
        const auto& x = j["max"];
        a.has_max = true;
        a.max_sq = x.at("squared").get<double>();
        a.max_count = x.at("count").get<std::uint64_t>();
        a.among_apn = x.at("among_apn").get<std::uint64_t>();
        a.among_spec = x.at("among_spec").get<double>();
        a.max_witness = x.at("witness").get<Images>();
    }
    if (j.contains("bent")) {
        a.bent = true;
        a.bent_witness = j["bent"].at("witness").get<Images>();
    }
    return a;
}

// ---------------------------------------------------------------------------
// Checkpoints: completed work items keyed by index, guarded by a spec
// fingerprint so a resume never mixes runs.

constexpr int kCheckpointVersion = 1;

class CheckpointStore {
public:
    CheckpointStore(std::optional<std::filesystem::path> path, json fingerprint)
        : path_(std::move(path)), fingerprint_(std::move(fingerprint)) {
        if (!path_ || !std::filesystem::exists(*path_)) return;
        std::ifstream in(*path_);
        json j;
        try {
            in >> j;
        } catch (const json::exception& e) {
            throw SearchError("cannot read checkpoint " + path_->string() + ": " + e.what());
        }
        if (j.value("version", 0) != kCheckpointVersion)
            throw SearchError("checkpoint " + path_->string() + " has an unsupported version");
        if (j.at("fingerprint") != fingerprint_)
            throw SearchError("checkpoint " + path_->string() + " belongs to a different search");
        for (const auto& [key, value] : j.at("items").items())
            done_[std::stoull(key)] = value;
    }

    std::optional<Accumulator> completed(std::size_t item) const {
        auto it = done_.find(item);
        if (it == done_.end()) return std::nullopt;
        return accumulator_from_json(it->second);
    }

    void record(std::size_t item, const Accumulator& a) {
        if (!path_) return;
        std::lock_guard lock(mutex_);
        done_[item] = to_json(a);
        json j;
        j["format"] = "grouplin-checkpoint";
        j["version"] = kCheckpointVersion;
        j["fingerprint"] = fingerprint_;
        j["items"] = json::object();
        for (const auto& [k, v] : done_) j["items"][std::to_string(k)] = v;
        const auto tmp = std::filesystem::path(path_->string() + ".tmp");
        {
            std::ofstream out(tmp);
            out << j.dump() << '\n';
            if (!out) throw SearchError("cannot write checkpoint " + tmp.string());
        }
        std::filesystem::rename(tmp, *path_);
    }

private:
    std::optional<std::filesystem::path> path_;
    json fingerprint_;
    std::map<std::size_t, json> done_;
    std::mutex mutex_;
};

// ---------------------------------------------------------------------------

struct Problem {
    GroupPtr k, n, product;
    IrrepSetPtr dual;          // in the requested realization
    IrrepSetPtr unitary_dual;  // for the Σδ² spectral cross-check
    Needs needs;
};

Problem prepare(const SearchSpec& spec) {
    Problem p;
    p.k = parse_group_spec(spec.domain);
    p.n = parse_group_spec(spec.codomain);
    p.product = direct_product(p.k, p.n);

    if (spec.objectives.empty()) throw SearchError("no objectives requested");
    for (Objective o : spec.objectives) switch (o) {
            case Objective::min_apn_sum: p.needs.apn = true; break;
            case Objective::min_spectral_sum: p.needs.spectral_sum = true; break;
            case Objective::min_max_nonlinearity: p.needs.max = true; break;
            case Objective::find_bent: p.needs.bent = true; break;
            case Objective::coincidence:
                p.needs.coincidence = p.needs.apn = p.needs.spectral_sum = p.needs.max = true;
                break;
        }
    if (p.needs.blocks() && !spec.spectral)
        throw SearchError("objectives other than min_apn_sum need spectral evaluation");
    if ((p.needs.max || p.needs.bent) && p.n->order() <= 1)
        throw SearchError("maximal nonlinearity and bentness need a nontrivial codomain");
    if (spec.random && spec.random->samples == 0)
        throw SearchError("random mode needs at least one sample");
    if (spec.tolerance < 0) throw SearchError("tolerance must be nonnegative");

    if (spec.spectral) {
        p.dual = irreps_of(p.product, spec.realization);
        p.unitary_dual = spec.realization == Realization::unitary
                             ? p.dual
                             : irreps_of(p.product, Realization::unitary);
    }
    return p;
}

json fingerprint(const SearchSpec& spec) {
    json objectives = json::array();
    for (Objective o : spec.objectives) objectives.push_back(to_string(o));
    json j{{"domain", spec.domain},
           {"codomain", spec.codomain},
           {"objectives", objectives},
           {"reduction", spec.reduction},
           {"realization", to_string(spec.realization)},
           {"spectral", spec.spectral},
           {"tolerance", spec.tolerance}};
    if (spec.random)
        j["random"] = {{"samples", spec.random->samples}, {"seed", spec.random->seed}};
    return j;
}

void evaluate(Evaluator& ev, const Needs& needs, const Images& f, Accumulator& acc, double tol) {
    ++acc.scanned;
    std::uint64_t apn = 0;
    if (needs.apn) {
        apn = ev.apn(f);
        acc.offer_apn(apn, f);
    }
    if (!needs.blocks()) return;
    const SpectralValues v = ev.spectral();
    if (needs.spectral_sum) acc.offer_spec(v.fourth, f, tol);
    if (needs.max) acc.offer_max(v.max_sq, apn, v.fourth, f, tol);
    if (needs.bent && v.bent) acc.offer_bent(f);
}

constexpr std::uint64_t kResyncInterval = 1024;

Accumulator scan_unit(const FunctionEnumerator& en, std::size_t unit, Evaluator& ev,
                      const Needs& needs, double tol) {
    Accumulator acc;
    Images f = en.unit_start(unit);
    const auto free = en.free_positions();
    const std::size_t first = en.prefix_length(), last = free.size();
    const std::size_t n_order = en.codomain_order();
    const bool blocks = needs.blocks();
    const bool stop_at_bent = needs.bent_only();
    if (blocks) ev.reset(f);
    std::uint64_t since_resync = 0;
    for (;;) {
        evaluate(ev, needs, f, acc, tol);
        if (stop_at_bent && acc.bent) break;
        std::size_t p = last;
        while (p > first) {
            const std::size_t pos = free[p - 1];
            const Element old = f[pos];
            const Element next = old + 1 < n_order ? old + 1 : 0;
            f[pos] = next;
            if (blocks) ev.change(pos, old, next);
            if (next != 0) break;
            --p;
        }
        if (p == first) break;
        if (blocks && ++since_resync == kResyncInterval) {
            ev.reset(f);
            since_resync = 0;
        }
    }
    return acc;
}

Accumulator scan_random_chunk(const FunctionEnumerator& en, std::size_t chunk,
                              std::uint64_t samples, std::uint64_t seed, const Images& base,
                              Evaluator& ev, const Needs& needs, double tol) {
    const std::uint64_t begin = samples * chunk / kRandomChunks;
    const std::uint64_t end = samples * (chunk + 1) / kRandomChunks;
    std::mt19937_64 rng(splitmix64(splitmix64(seed) + chunk));
    const std::uint64_t n = en.codomain_order();
    const std::uint64_t threshold = (0 - n) % n;  // rejection keeps draws uniform
    auto draw = [&] {
        std::uint64_t x;
        do x = rng();
        while (x < threshold);
        return static_cast<Element>(x % n);
    };
    Accumulator acc;
    Images f = base;
    for (std::uint64_t s = begin; s < end; ++s) {
        for (std::size_t pos : en.free_positions()) f[pos] = draw();
        if (needs.blocks()) ev.reset(f);
        evaluate(ev, needs, f, acc, tol);
    }
    return acc;
}

// Runs work items 0..count-1 on `workers` threads and merges them in index
// order. Each thread owns its evaluator; items share nothing while running.
template <typename Work>
Accumulator run_items(std::size_t count, unsigned workers, const Problem& p,
                      const SearchSpec& spec, CheckpointStore& store, Work work) {
    std::vector<std::optional<Accumulator>> results(count);
    std::vector<std::size_t> pending;
    for (std::size_t i = 0; i < count; ++i) {
        results[i] = store.completed(i);
        if (!results[i]) pending.push_back(i);
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        try {
            Evaluator ev(*p.k, *p.n, p.dual.get(), p.needs.blocks(), spec.tolerance);
            for (std::size_t i; (i = next.fetch_add(1)) < pending.size();) {
                const std::size_t item = pending[i];
                results[item] = work(item, ev);
                store.record(item, *results[item]);
            }
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = pending.size();
        }
    };
    const unsigned threads =
        std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(pending.size())));
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
        worker();
    }
    if (failure) std::rethrow_exception(failure);

    Accumulator total;
    for (const auto& r : results) total.merge(*r, spec.tolerance);
    return total;
}

SearchReport assemble(const SearchSpec& spec, const Problem& p, const FunctionEnumerator& en,
                      const Accumulator& acc) {
    SearchReport r;
    r.domain = spec.domain;
    r.codomain = spec.codomain;
    r.mode = spec.random ? "random" : "exhaustive";
    r.reduction = spec.reduction;
    r.realization = spec.realization;
    r.space_size = en.size();
    r.scanned_count = acc.scanned;

    auto table = [&](const Images& w) { return FunctionTable(p.k, p.n, w); };
    const double group_order = static_cast<double>(p.product->order());

    if (p.needs.apn && acc.has_apn) {
        ApnMinimum a;
        a.value = acc.apn;
        a.spectral_value = group_order * static_cast<double>(acc.apn);
        a.witness = acc.apn_witness;
        if (p.unitary_dual) a.spectral_check = apn_sum_spectral(table(a.witness), *p.unitary_dual);
        r.min_apn_sum = a;
    }
    if (p.needs.spectral_sum && acc.has_spec) {
        SpectralSumMinimum s;
        s.witness = acc.spec_witness;
        s.value = fourth_power_sum(table(s.witness), *p.dual);
        r.min_spectral_sum = s;
    }
    if (p.needs.max && acc.has_max) {
        MaxNlMinimum m;
        m.witness = acc.max_witness;
        const auto mx = max_nonlinearity(table(m.witness), *p.dual);
        m.value = mx.value;
        m.squared = mx.squared;
        m.minimizer_count = acc.max_count;
        r.min_max_nonlinearity = m;
    }
    if (p.needs.bent) {
        r.bent_found = acc.bent;
        if (acc.bent) r.bent_witness = acc.bent_witness;
    }
    if (p.needs.coincidence && acc.has_max) {
        CoincidenceResult c;
        c.apn_min_among_maxnl_minimizers = acc.among_apn;
        c.spectral_min_among_maxnl_minimizers = acc.among_spec;
        c.coincidence = acc.among_apn == acc.apn;
        c.spectral_coincidence = std::abs(acc.among_spec - acc.spec) <= spec.tolerance;
        r.coincidence = c;
    }
    return r;
}

}  // namespace

SearchReport exhaustive_search(const SearchSpec& spec) {
    if (spec.random) throw SearchError("exhaustive search called with a random-mode spec");
    const auto start = std::chrono::steady_clock::now();
    const Problem p = prepare(spec);
    const FunctionEnumerator en(*p.k, *p.n, spec.reduction);
    if (en.size() > spec.space_ceiling) throw SpaceTooLarge(en.size(), spec.space_ceiling);
    CheckpointStore store(spec.checkpoint, fingerprint(spec));
    const Accumulator acc =
        run_items(en.unit_count(), spec.workers, p, spec, store, [&](std::size_t u, Evaluator& ev) {
            return scan_unit(en, u, ev, p.needs, spec.tolerance);
        });
    SearchReport r = assemble(spec, p, en, acc);
    r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

SearchReport coincidence_scan(const SearchSpec& spec) {
    SearchSpec s = spec;
    s.objectives.insert(Objective::coincidence);
    return exhaustive_search(s);
}

SearchReport bent_search(const SearchSpec& spec) {
    SearchSpec s = spec;
    s.objectives = {Objective::find_bent};
    return s.random ? random_search(s) : exhaustive_search(s);
}

SearchReport random_search(const SearchSpec& spec) {
    if (!spec.random) throw SearchError("random search needs samples and a seed");
    const auto start = std::chrono::steady_clock::now();
    const Problem p = prepare(spec);
    const FunctionEnumerator en(*p.k, *p.n, spec.reduction);
    CheckpointStore store(spec.checkpoint, fingerprint(spec));
    const Images base = en.unit_start(0);  // pinned identity image, zeros elsewhere
    const RandomMode mode = *spec.random;
    const Accumulator acc =
        run_items(kRandomChunks, spec.workers, p, spec, store, [&](std::size_t c, Evaluator& ev) {
            return scan_random_chunk(en, c, mode.samples, mode.seed, base, ev, p.needs,
                                     spec.tolerance);
        });
    SearchReport r = assemble(spec, p, en, acc);
    r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

SearchReport run_search(const SearchSpec& spec) {
    return spec.random ? random_search(spec) : exhaustive_search(spec);
}

}  // namespace grouplin
