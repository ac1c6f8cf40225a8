#include "nicegen/bundle.hpp"

#include <utility>

#include "nicegen/errors.hpp"

namespace nicegen {

const char* to_string(ProblemKind kind) {
    switch (kind) {
        case ProblemKind::lu_full: return "lu_full";
        case ProblemKind::lu_deficient: return "lu_deficient";
        case ProblemKind::unimodular_inverse: return "unimodular_inverse";
        case ProblemKind::qr: return "qr";
        case ProblemKind::system_unique: return "system_unique";
        case ProblemKind::system_infinite: return "system_infinite";
        case ProblemKind::system_inconsistent: return "system_inconsistent";
    }
    throw contract_violation("unknown problem kind");
}

ProblemKind problem_kind_from_string(const std::string& name) {
    for (ProblemKind k :
         {ProblemKind::lu_full, ProblemKind::lu_deficient, ProblemKind::unimodular_inverse,
          ProblemKind::qr, ProblemKind::system_unique, ProblemKind::system_infinite,
          ProblemKind::system_inconsistent})
        if (name == to_string(k)) return k;
    throw contract_violation("unknown problem kind: " + name);
}

ProblemBundle make_bundle(ProblemKind kind, const GenConfig& config) {
    config.validate();
    SplitMix64 rng(config.seed);
    ProblemBundle bundle{kind, LUProblem{}, config.seed, config, kSchemaVersion};
    switch (kind) {
        case ProblemKind::lu_full: {
            LUPair pair = gen_full_rank(config, rng);
            bundle.payload = LUProblem{std::move(pair), config.n, {}};
            break;
        }
        case ProblemKind::lu_deficient: {
            DeficientLU d = gen_rank_deficient(config, rng);
            bundle.payload = LUProblem{std::move(d.pair), d.rank, std::move(d.dependence)};
            break;
        }
        case ProblemKind::unimodular_inverse: {
            UnimodularResult u = gen_unimodular(config, rng);
            bundle.payload =
                InverseProblem{std::move(u.pair), std::move(u.inverse), std::move(u.trace)};
            break;
        }
        case ProblemKind::qr:
            bundle.payload = gen_qr(config, rng);
            break;
        case ProblemKind::system_unique:
            bundle.payload = gen_unique_system(config, rng);
            break;
        case ProblemKind::system_infinite:
            bundle.payload = gen_infinite_system(config, rng);
            break;
        case ProblemKind::system_inconsistent:
            bundle.payload = gen_inconsistent_system(config, rng);
            break;
    }
    return bundle;
}

}  // namespace nicegen
