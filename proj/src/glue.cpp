#include "qvertex/glue.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "qvertex/vertex.hpp"

namespace qvertex {

void LoopModel::validate() const {
    if (M < 1) throw std::domain_error("LoopModel: M must be >= 1");
    if ((int)gamma.size() != M || (int)kahler.size() != M)
        throw std::domain_error("LoopModel: gamma/kahler must have M entries");
    for (int i = 0; i < M; ++i)
        for (int j = i + 1; j < M; ++j)
            if (kahler[i] == kahler[j] && gamma[i] != gamma[j])
                throw std::domain_error(
                    "LoopModel: edges sharing a Kahler name must share the framing factor");
}

std::vector<std::string> LoopModel::distinct_names() const {
    std::set<std::string> seen(kahler.begin(), kahler.end());
    return {seen.begin(), seen.end()};
}

long long LoopModel::gamma_total() const {
    long long g = 0;
    for (long long x : gamma) g += x;
    return g;
}

long long LoopModel::gamma_of(const std::string& name) const {
    for (int i = 0; i < M; ++i)
        if (kahler[i] == name) return gamma[i];
    throw std::domain_error("LoopModel: unknown Kahler name " + name);
}

namespace {

// recursive sum over internal partition tuples with total size <= budget
void glue_rec(const std::vector<Partition>& lambdas, const LoopModel& model, int edge,
              int budget, std::vector<Partition>& mus, KSeries& out) {
    int M = model.M;
    if (edge == M) {
        // weight (-1)^{sum gamma_i |mu_i|} q^{(1/2) sum (gamma_i+1) kappa_i} prod Q_i^{|mu_i|}
        long long sgn = 0;
        Frac qe(0);
        KMonomial mono;
        for (int i = 0; i < M; ++i) {
            sgn += model.gamma[i] * mus[i].size();
            qe += Frac((model.gamma[i] + 1) * mus[i].kappa(), 2);
            mono = mono * KMonomial::name_pow(model.kahler[i], Frac(mus[i].size()));
        }
        QRat coeff = QRat::q_pow(qe);
        if (sgn % 2 != 0) coeff = -coeff;
        for (int i = 0; i < M; ++i) {
            const Partition& prev = mus[(i + M - 1) % M];
            coeff = coeff * vertex(prev.transpose(), lambdas[i], mus[i]);
            if (coeff.is_zero()) break;
        }
        out.add_term(mono, coeff);
        return;
    }
    for (int n = 0; n <= budget; ++n) {
        for (const auto& mu : partitions_of(n)) {
            mus[edge] = mu;
            glue_rec(lambdas, model, edge + 1, budget - n, mus, out);
        }
    }
    mus[edge] = Partition();
}

} // namespace

KSeries open_amplitude(const std::vector<Partition>& lambdas, const LoopModel& model,
                       const Frac& D) {
    model.validate();
    if ((int)lambdas.size() != model.M)
        throw std::domain_error("open_amplitude: need one boundary partition per vertex");
    KSeries out(D);
    int budget = (int)(D.n / D.d); // total |mu| budget: weight of the tuple monomial
    std::vector<Partition> mus(model.M);
    glue_rec(lambdas, model, 0, budget, mus, out);
    return out;
}

KSeries one_brane(const Partition& lambda, const LoopModel& model, const Frac& D) {
    std::vector<Partition> lambdas(model.M);
    lambdas[0] = lambda;
    return open_amplitude(lambdas, model, D);
}

KSeries closed_string(const LoopModel& model, const Frac& D) {
    return one_brane(Partition(), model, D);
}

} // namespace qvertex
