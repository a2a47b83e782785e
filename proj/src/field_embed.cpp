#include <map>
#include <mutex>

#include "gscope/factor_univariate.hpp"
#include "gscope/field.hpp"
#include "gscope/unipoly.hpp"

namespace gscope {

namespace {

struct EmbedData {
    // images of g_from^i in the target, i in [0, e_from)
    std::vector<FieldElement> basis_images;
};

std::map<std::pair<const FieldSpec*, const FieldSpec*>, EmbedData>& embed_cache() {
    static std::map<std::pair<const FieldSpec*, const FieldSpec*>, EmbedData> c;
    return c;
}

std::mutex& embed_mutex() {
    static std::mutex m;
    return m;
}

const EmbedData& get_embedding(const FieldSpec* from, const FieldSpec* to) {
    std::lock_guard<std::mutex> lock(embed_mutex());
    auto& cache = embed_cache();
    auto it = cache.find({from, to});
    if (it != cache.end()) return it->second;

    // the defining modulus of `from`, viewed over `to`
    std::vector<FieldElement> mc;
    mc.reserve(from->e + 1);
    for (auto c : from->modulus) mc.push_back(FieldElement::scalar(to, static_cast<std::int64_t>(c)));
    mc.push_back(FieldElement::one(to));
    const UniPoly modulus_over_target = UniPoly::from_coeffs(std::move(mc));
    std::vector<FieldElement> roots = up_roots(modulus_over_target);
    if (roots.empty()) throw InternalConsistencyError("modulus has no root in extension");
    const FieldElement g_image = roots.front();  // up_roots sorts ascending

    EmbedData data;
    data.basis_images.reserve(from->e);
    FieldElement acc = FieldElement::one(to);
    for (std::uint32_t i = 0; i < from->e; ++i) {
        data.basis_images.push_back(acc);
        acc = acc * g_image;
    }
    return cache.emplace(std::make_pair(from, to), std::move(data)).first->second;
}

}  // namespace

FieldElement ff_embed_to(const FieldElement& x, const FieldSpec* target) {
    if (!x.spec()) return FieldElement::zero(target);
    const FieldSpec* from = x.spec();
    if (from == target) return x;
    if (from->p != target->p || target->e % from->e != 0)
        throw std::invalid_argument("no embedding between these fields");
    if (from->e == 1) return FieldElement::scalar(target, x.coeffs()[0]);
    const EmbedData& data = get_embedding(from, target);
    FieldElement out = FieldElement::zero(target);
    for (std::uint32_t i = 0; i < from->e; ++i) {
        const std::uint32_t c = x.coeffs()[i];
        if (c == 0) continue;
        out = out + scale(data.basis_images[i], FieldElement::scalar(target, c));
    }
    return out;
}

FieldElement ff_embed(const FieldElement& x, std::uint32_t m) {
    if (m < 1) throw std::invalid_argument("extension multiplier must be positive");
    if (!x.spec()) return FieldElement();
    const FieldSpec* target = FieldTable::get(x.spec()->p, x.spec()->e * m);
    return ff_embed_to(x, target);
}

std::optional<FieldElement> ff_project(const FieldElement& x, const FieldSpec* sub) {
    if (!x.spec()) return FieldElement::zero(sub);
    const FieldSpec* from = x.spec();
    if (from == sub) return x;
    if (from->p != sub->p || from->e % sub->e != 0) return std::nullopt;
    if (sub->e == 1) {
        for (std::size_t i = 1; i < x.coeffs().size(); ++i)
            if (x.coeffs()[i] != 0) return std::nullopt;
        return FieldElement::scalar(sub, x.coeffs()[0]);
    }
    // Solve sum c_i * image(g_sub^i) = x over GF(p) by Gaussian elimination.
    const EmbedData& data = get_embedding(sub, from);
    const std::uint32_t p = from->p;
    const std::uint32_t rows = from->e, cols = sub->e;
    std::vector<std::vector<std::int64_t>> a(rows, std::vector<std::int64_t>(cols + 1, 0));
    for (std::uint32_t j = 0; j < cols; ++j)
        for (std::uint32_t i = 0; i < rows; ++i) a[i][j] = data.basis_images[j].coeffs()[i];
    for (std::uint32_t i = 0; i < rows; ++i) a[i][cols] = x.coeffs()[i];
    std::uint32_t rank = 0;
    std::vector<std::int64_t> pivot_col(cols, -1);
    for (std::uint32_t col = 0; col < cols && rank < rows; ++col) {
        std::uint32_t sel = rank;
        while (sel < rows && a[sel][col] % p == 0) ++sel;
        if (sel == rows) continue;
        std::swap(a[sel], a[rank]);
        const std::int64_t inv = [&] {
            std::int64_t t = 0, nt = 1, r = p, nr = a[rank][col] % p;
            while (nr) {
                const std::int64_t q = r / nr;
                std::int64_t tmp = t - q * nt;
                t = nt;
                nt = tmp;
                tmp = r - q * nr;
                r = nr;
                nr = tmp;
            }
            return ((t % p) + p) % p;
        }();
        for (auto& v : a[rank]) v = v * inv % p;
        for (std::uint32_t i = 0; i < rows; ++i) {
            if (i == rank) continue;
            const std::int64_t f = a[i][col] % p;
            if (f == 0) continue;
            for (std::uint32_t j = 0; j <= cols; ++j)
                a[i][j] = ((a[i][j] - f * a[rank][j]) % p + p) % p;
        }
        pivot_col[col] = rank;
        ++rank;
    }
    std::vector<std::uint32_t> sol(cols, 0);
    for (std::uint32_t col = 0; col < cols; ++col)
        if (pivot_col[col] >= 0)
            sol[col] = static_cast<std::uint32_t>(((a[pivot_col[col]][cols]) % p + p) % p);
    // rows without pivots must have zero rhs, otherwise x is not in the image
    for (std::uint32_t i = rank; i < rows; ++i)
        if (a[i][cols] % p != 0) return std::nullopt;
    FieldElement candidate(sub, std::move(sol));
    if (ff_embed_to(candidate, from) != x) return std::nullopt;
    return candidate;
}

}  // namespace gscope
