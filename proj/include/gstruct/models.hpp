#pragma once

#include "gstruct/g_structures.hpp"

#include <map>
#include <string>
#include <vector>

namespace gstruct {

struct ModelHandle {
    std::string name;
    std::map<std::string, Rational> params;
    Space space;
    GStructure structure;
    Form torsion;
    std::optional<Form> nijenhuis;
    // True when ∇T = 0 is part of the model data rather than computed.
    bool torsion_parallel_assumed = false;
    std::vector<std::string> notes;
};

// Each constructor validates its own data and throws InternalConsistency on failure.
ModelHandle nil6();
ModelHandle s6_nearly_kaehler(const Rational& t);
ModelHandle s7_nearly_parallel(const Rational& lambda);
ModelHandle s5_sasakian();

std::vector<std::string> model_names();

// Builds a model by name; unknown names or parameters raise UsageError.
ModelHandle make_model(const std::string& name, const std::map<std::string, Rational>& params);

// R_ijkl = 4/3 (g_jk g_il - g_ik g_jl) + 1/3 (F_kj F_li - F_ki F_lj + 2 F_ij F_lk)
//        + 1/3 (η_i η_k g_jl - η_j η_k g_il + η_j η_l g_ik - η_i η_l g_jk)
Curvature sasakian_curvature(const Form& eta, const Form& F5);

} // namespace gstruct
