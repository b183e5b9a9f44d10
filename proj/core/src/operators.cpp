#include <birank/errors.hpp>
#include <birank/operators.hpp>

#include <algorithm>
#include <cmath>

#if defined(_OPENMP)
#define BIRANK_PARALLEL_FOR _Pragma("omp parallel for schedule(static)")
#else
#define BIRANK_PARALLEL_FOR
#endif

namespace birank {

namespace {

void require_size(std::size_t got, std::size_t want, const char* what) {
    if (got != want) {
        throw Error(ErrorCode::DimensionMismatch,
                    std::string(what) + ": length " + std::to_string(got) + ", expected " + std::to_string(want));
    }
}

constexpr std::size_t kChunk = 1024;

} // namespace

RankVector RankVector::uniform(std::size_t size) {
    return RankVector(std::vector<double>(size, 1.0 / static_cast<double>(size)));
}

RankVector RankVector::unit(std::size_t size, std::size_t at) {
    std::vector<double> v(size, 0.0);
    v.at(at) = 1.0;
    return RankVector(std::move(v));
}

bool RankVector::is_distribution(double tol) const noexcept {
    if (values_.empty()) {
        return false;
    }
    for (double x : values_) {
        if (!(x >= 0.0)) {
            return false;
        }
    }
    return std::abs(stable_sum(values_) - 1.0) <= tol;
}

void RankParams::validate_pagerank() const {
    if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
        throw Error(ErrorCode::InvalidParameter, "epsilon must lie in [0,1]");
    }
    if (!(tol > 0.0)) {
        throw Error(ErrorCode::InvalidParameter, "tol must be positive");
    }
    if (max_iter < 1) {
        throw Error(ErrorCode::InvalidParameter, "max_iter must be >= 1");
    }
}

void RankParams::validate_ncdaware() const {
    if (!(eta > 0.0 && mu >= 0.0 && eta + mu < 1.0)) {
        throw Error(ErrorCode::InvalidParameter, "NCDawareRank needs eta > 0, mu >= 0, eta + mu < 1");
    }
    if (!(tol > 0.0) || max_iter < 1) {
        throw Error(ErrorCode::InvalidParameter, "tol must be positive and max_iter >= 1");
    }
}

Partition::Partition(std::vector<vertex_t> block_of) : block_of_(std::move(block_of)) {
    if (block_of_.empty()) {
        throw Error(ErrorCode::EmptyBlock, "partition covers no vertices");
    }
    const auto k = static_cast<std::size_t>(*std::max_element(block_of_.begin(), block_of_.end())) + 1;
    block_sizes_.assign(k, 0);
    for (auto b : block_of_) {
        ++block_sizes_[b];
    }
    for (std::size_t b = 0; b < k; ++b) {
        if (block_sizes_[b] == 0) {
            throw Error(ErrorCode::EmptyBlock, "block " + std::to_string(b) + " has no members");
        }
    }
}

Partition side_partition(const BipartiteGraph& g) {
    std::vector<vertex_t> blocks(g.size(), 0);
    std::fill(blocks.begin() + static_cast<std::ptrdiff_t>(g.m()), blocks.end(), 1);
    return Partition(std::move(blocks));
}

double stable_sum(std::span<const double> x) {
    const std::size_t chunks = (x.size() + kChunk - 1) / kChunk;
    if (chunks == 0) {
        return 0.0;
    }
    std::vector<double> partial(chunks, 0.0);
    BIRANK_PARALLEL_FOR
    for (std::size_t c = 0; c < chunks; ++c) {
        const std::size_t end = std::min(x.size(), (c + 1) * kChunk);
        double s = 0.0;
        for (std::size_t i = c * kChunk; i < end; ++i) {
            s += x[i];
        }
        partial[c] = s;
    }
    for (std::size_t width = 1; width < chunks; width *= 2) {
        for (std::size_t i = 0; i + width < chunks; i += 2 * width) {
            partial[i] += partial[i + width];
        }
    }
    return partial[0];
}

TransitionOperator::TransitionOperator(const BipartiteGraph& g, HMode mode)
    : graph_(&g), mode_(mode), row_scale_(g.size(), 0.0) {
    const bool use_weights = mode == HMode::Weighted && g.weighted();
    for (std::size_t i = 0; i < g.size(); ++i) {
        double total = 0.0;
        if (use_weights) {
            for (double w : g.neighbor_weights(i)) {
                total += w;
            }
        } else {
            total = static_cast<double>(g.neighbors(i).size());
        }
        row_scale_[i] = total > 0.0 ? 1.0 / total : 0.0;
    }
}

void TransitionOperator::apply_left(std::span<const double> x, std::span<double> out) const {
    const auto& g = *graph_;
    require_size(x.size(), g.size(), "h_matvec input");
    require_size(out.size(), g.size(), "h_matvec output");
    const std::size_t m = g.m();
    const std::size_t total = g.size();
    const bool use_weights = mode_ == HMode::Weighted && g.weighted();
    // Pull form: each output entry gathers from the opposite side.
    BIRANK_PARALLEL_FOR
    for (std::size_t j = 0; j < total; ++j) {
        const std::size_t offset = j < m ? m : 0;
        const auto nbrs = g.neighbors(j);
        const auto ws = g.neighbor_weights(j);
        double acc = 0.0;
        for (std::size_t k = 0; k < nbrs.size(); ++k) {
            const std::size_t i = offset + nbrs[k];
            const double w = use_weights ? ws[k] : 1.0;
            acc += x[i] * row_scale_[i] * w;
        }
        out[j] = acc;
    }
}

void TransitionOperator::apply_right(std::span<const double> x, std::span<double> out) const {
    const auto& g = *graph_;
    require_size(x.size(), g.size(), "H x input");
    require_size(out.size(), g.size(), "H x output");
    const std::size_t m = g.m();
    const std::size_t total = g.size();
    const bool use_weights = mode_ == HMode::Weighted && g.weighted();
    BIRANK_PARALLEL_FOR
    for (std::size_t i = 0; i < total; ++i) {
        const std::size_t offset = i < m ? m : 0;
        const auto nbrs = g.neighbors(i);
        const auto ws = g.neighbor_weights(i);
        double acc = 0.0;
        for (std::size_t k = 0; k < nbrs.size(); ++k) {
            acc += (use_weights ? ws[k] : 1.0) * x[offset + nbrs[k]];
        }
        out[i] = acc * row_scale_[i];
    }
}

double TransitionOperator::dangling_mass(std::span<const double> x) const {
    double s = 0.0;
    for (std::size_t i = 0; i < row_scale_.size(); ++i) {
        if (row_scale_[i] == 0.0) {
            s += x[i];
        }
    }
    return s;
}

double TransitionOperator::entry(std::size_t from, std::size_t to) const {
    const auto& g = *graph_;
    if (from >= g.size() || to >= g.size()) {
        throw Error(ErrorCode::IndexOutOfRange, "H entry index out of range");
    }
    if (g.side_of(from) == g.side_of(to)) {
        return 0.0;
    }
    const std::size_t local = from < g.m() ? to - g.m() : to;
    const auto nbrs = g.neighbors(from);
    const auto it = std::lower_bound(nbrs.begin(), nbrs.end(), static_cast<vertex_t>(local));
    if (it == nbrs.end() || *it != local) {
        return 0.0;
    }
    const bool use_weights = mode_ == HMode::Weighted && g.weighted();
    const double w = use_weights ? g.neighbor_weights(from)[static_cast<std::size_t>(it - nbrs.begin())] : 1.0;
    return w * row_scale_[from];
}

BlockTeleport::BlockTeleport(const Partition& sides) : sides_(&sides) {}

void BlockTeleport::apply(std::span<const double> x, std::span<double> out) const {
    const auto& p = *sides_;
    require_size(x.size(), p.size(), "m_matvec input");
    require_size(out.size(), p.size(), "m_matvec output");
    const std::size_t k = p.block_count();
    std::vector<double> mean(k, 0.0);
    const auto blocks = p.blocks();
    // Contiguous blocks (the side partition) get the deterministic reduction.
    bool contiguous = true;
    for (std::size_t i = 1; i < blocks.size(); ++i) {
        if (blocks[i] < blocks[i - 1]) {
            contiguous = false;
            break;
        }
    }
    if (contiguous) {
        std::size_t start = 0;
        for (std::size_t b = 0; b < k; ++b) {
            const std::size_t len = p.block_sizes()[b];
            mean[b] = stable_sum(x.subspan(start, len));
            start += len;
        }
    } else {
        for (std::size_t i = 0; i < x.size(); ++i) {
            mean[blocks[i]] += x[i];
        }
    }
    for (std::size_t b = 0; b < k; ++b) {
        mean[b] /= static_cast<double>(p.block_sizes()[b]);
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
        out[i] = mean[blocks[i]];
    }
}

std::vector<double> h_matvec(const BipartiteGraph& g, std::span<const double> pi, HMode mode) {
    std::vector<double> out(g.size());
    TransitionOperator(g, mode).apply_left(pi, out);
    return out;
}

std::vector<double> m_matvec(const BipartiteGraph& g, const Partition& sides, std::span<const double> pi) {
    require_size(sides.size(), g.size(), "partition");
    std::vector<double> out(g.size());
    BlockTeleport(sides).apply(pi, out);
    return out;
}

std::vector<double> pagerank_step(const BipartiteGraph& g, std::span<const double> pi, const RankParams& params) {
    require_size(pi.size(), g.size(), "pagerank_step input");
    const TransitionOperator h(g, params.h_mode);
    std::vector<double> out(g.size());
    h.apply_left(pi, out);
    const double eps = params.epsilon;
    const double jump = (eps * h.dangling_mass(pi) + (1.0 - eps) * stable_sum(pi)) / static_cast<double>(g.size());
    for (auto& x : out) {
        x = eps * x + jump;
    }
    return out;
}

std::vector<double> bipartiterank_step(const BipartiteGraph& g, const Partition& sides, std::span<const double> pi,
                                       const RankParams& params) {
    require_size(pi.size(), g.size(), "bipartiterank_step input");
    require_size(sides.size(), g.size(), "partition");
    std::vector<double> walk(g.size());
    std::vector<double> jump(g.size());
    TransitionOperator(g, params.h_mode).apply_left(pi, walk);
    BlockTeleport(sides).apply(pi, jump);
    const double eps = params.epsilon;
    for (std::size_t i = 0; i < walk.size(); ++i) {
        walk[i] = eps * walk[i] + (1.0 - eps) * jump[i];
    }
    return walk;
}

NcdFactorization ncdaware_factorize(const BipartiteGraph& g, const Partition& partition) {
    require_size(partition.size(), g.size(), "partition");
    const std::size_t n = g.size();
    const std::size_t k = partition.block_count();
    const std::size_t m = g.m();

    std::vector<std::size_t> r_offsets{0};
    std::vector<vertex_t> r_cols;
    std::vector<double> r_vals;
    std::vector<vertex_t> scratch;
    for (std::size_t u = 0; u < n; ++u) {
        scratch.clear();
        scratch.push_back(partition.block_of(u));
        const std::size_t offset = u < m ? m : 0;
        for (auto local : g.neighbors(u)) {
            scratch.push_back(partition.block_of(offset + local));
        }
        std::sort(scratch.begin(), scratch.end());
        scratch.erase(std::unique(scratch.begin(), scratch.end()), scratch.end());
        const double share = 1.0 / static_cast<double>(scratch.size());
        for (auto b : scratch) {
            r_cols.push_back(b);
            r_vals.push_back(share);
        }
        r_offsets.push_back(r_cols.size());
    }

    std::vector<std::size_t> a_offsets(k + 1, 0);
    for (std::size_t b = 0; b < k; ++b) {
        a_offsets[b + 1] = a_offsets[b] + partition.block_sizes()[b];
    }
    std::vector<vertex_t> a_cols(n);
    std::vector<double> a_vals(n);
    std::vector<std::size_t> cursor(a_offsets.begin(), a_offsets.end() - 1);
    for (std::size_t v = 0; v < n; ++v) {
        const auto b = partition.block_of(v);
        const auto slot = cursor[b]++;
        a_cols[slot] = static_cast<vertex_t>(v);
        a_vals[slot] = 1.0 / static_cast<double>(partition.block_sizes()[b]);
    }

    return NcdFactorization{partition, SparseRows(n, k, std::move(r_offsets), std::move(r_cols), std::move(r_vals)),
                            SparseRows(k, n, std::move(a_offsets), std::move(a_cols), std::move(a_vals))};
}

void NcdFactorization::apply_left(std::span<const double> x, std::span<double> out) const {
    require_size(x.size(), r.rows(), "NCD M input");
    require_size(out.size(), r.rows(), "NCD M output");
    std::vector<double> block_mass(r.cols(), 0.0);
    for (std::size_t u = 0; u < r.rows(); ++u) {
        const auto cols = r.row(u);
        const auto vals = r.row_values(u);
        for (std::size_t e = 0; e < cols.size(); ++e) {
            block_mass[cols[e]] += x[u] * vals[e];
        }
    }
    for (std::size_t v = 0; v < out.size(); ++v) {
        const auto b = partition.block_of(v);
        out[v] = block_mass[b] / static_cast<double>(partition.block_sizes()[b]);
    }
}

std::vector<double> ncdaware_step(const BipartiteGraph& g, const NcdFactorization& factors, std::span<const double> pi,
                                  const RankParams& params) {
    require_size(pi.size(), g.size(), "ncdaware_step input");
    require_size(factors.r.rows(), g.size(), "factorization");
    const TransitionOperator h(g, params.h_mode);
    std::vector<double> walk(g.size());
    std::vector<double> block(g.size());
    h.apply_left(pi, walk);
    factors.apply_left(pi, block);
    const double eta = params.eta;
    const double mu = params.mu;
    const double jump =
        (eta * h.dangling_mass(pi) + (1.0 - eta - mu) * stable_sum(pi)) / static_cast<double>(g.size());
    for (std::size_t i = 0; i < walk.size(); ++i) {
        walk[i] = eta * walk[i] + mu * block[i] + jump;
    }
    return walk;
}

} // namespace birank
