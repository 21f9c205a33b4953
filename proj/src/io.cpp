#include "uqmod/io.hpp"

#include <fstream>
#include <sstream>

namespace uqmod {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& msg) {
    fail(Err::ParseError, path + ": " + msg);
}

const Json& need(const Json& j, const std::string& key, const std::string& path) {
    if (!j.contains(key)) bad(path, "missing key '" + key + "'");
    return j.at(key);
}

Scalar scalar_at(FieldCtx F, const Json& j, const std::string& path) {
    if (!j.is_string()) bad(path, "expected a scalar literal string");
    try {
        return Scalar::parse(F, j.get<std::string>());
    } catch (const Error& e) {
        bad(path, e.what());
    }
}

std::vector<long> exps_at(const FgAbelianGroup& grp, const Json& j, const std::string& path) {
    if (!j.is_array() || static_cast<int>(j.size()) != grp.num_gens())
        bad(path, "expected " + std::to_string(grp.num_gens()) + " integer exponents");
    std::vector<long> e;
    for (const auto& x : j) {
        if (!x.is_number_integer()) bad(path, "expected integer exponent");
        e.push_back(x.get<long>());
    }
    return e;
}

} // namespace

Json field_to_json(const FieldContext& F) {
    Json j;
    j["cyclotomic_order"] = F.order();
    j["indeterminates"] = F.spec().indeterminates;
    return j;
}

FieldCtx field_from_json(const Json& j) {
    FieldSpec spec;
    spec.cyclotomic_order = need(j, "cyclotomic_order", "$.field").get<unsigned>();
    for (const auto& v : need(j, "indeterminates", "$.field"))
        spec.indeterminates.push_back(v.get<std::string>());
    return FieldContext::make(std::move(spec));
}

Json group_to_json(const FgAbelianGroup& g) {
    Json j;
    j["free_rank"] = g.free_rank;
    j["torsion"] = g.torsion;
    return j;
}

FgAbelianGroup group_from_json(const Json& j) {
    std::vector<long> tors;
    for (const auto& d : need(j, "torsion", "$.group")) tors.push_back(d.get<long>());
    return FgAbelianGroup(need(j, "free_rank", "$.group").get<int>(), std::move(tors));
}

Character character_from_json(FieldCtx F, const FgAbelianGroup& grp, const Json& j,
                              const std::string& path) {
    if (!j.is_array() || static_cast<int>(j.size()) != grp.num_gens())
        bad(path, "expected " + std::to_string(grp.num_gens()) + " scalar literals");
    std::vector<Scalar> vals;
    for (size_t k = 0; k < j.size(); ++k)
        vals.push_back(scalar_at(F, j[k], path + "[" + std::to_string(k) + "]"));
    try {
        return Character(grp, std::move(vals));
    } catch (const Error& e) {
        bad(path, e.what());
    }
}

Character character_from_literals(FieldCtx F, const FgAbelianGroup& grp, const std::string& csv) {
    std::vector<Scalar> vals;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) vals.push_back(Scalar::parse(F, tok));
    if (static_cast<int>(vals.size()) != grp.num_gens())
        fail(Err::ParseError, "character needs " + std::to_string(grp.num_gens()) +
                                  " comma-separated values, got " + std::to_string(vals.size()));
    return Character(grp, std::move(vals));
}

Json character_to_json(const Character& c) {
    Json j = Json::array();
    for (const auto& v : c.values()) j.push_back(v.to_string());
    return j;
}

bool is_reduced_file(const Json& j) { return j.contains("K") && j.contains("l"); }

namespace {

CartanMatrix cartan_from_json(const Json& j, const std::string& path) {
    if (!j.is_array()) bad(path, "expected a matrix");
    std::vector<std::vector<long>> m;
    for (const auto& row : j) {
        std::vector<long> r;
        for (const auto& x : row) r.push_back(x.get<long>());
        m.push_back(std::move(r));
    }
    return validate_cartan(m);
}

} // namespace

std::pair<CartanDatum, LinkingData> datum_from_json(const Json& j) {
    FieldCtx F = field_from_json(need(j, "field", "$"));
    FgAbelianGroup grp = group_from_json(need(j, "group", "$"));
    const Json& gj = need(j, "g", "$");
    std::vector<GroupElement> g;
    for (size_t i = 0; i < gj.size(); ++i)
        g.emplace_back(grp, exps_at(grp, gj[i], "$.g[" + std::to_string(i) + "]"));
    const Json& cj = need(j, "chi", "$");
    std::vector<Character> chi;
    for (size_t i = 0; i < cj.size(); ++i)
        chi.push_back(character_from_json(F, grp, cj[i], "$.chi[" + std::to_string(i) + "]"));
    CartanMatrix cm = cartan_from_json(need(j, "cartan", "$"), "$.cartan");
    CartanDatum d = build_datum(F, grp, std::move(g), std::move(chi), std::move(cm));
    std::vector<std::tuple<int, int, Scalar>> entries;
    if (j.contains("linking")) {
        const Json& lj = j.at("linking");
        for (size_t k = 0; k < lj.size(); ++k) {
            std::string path = "$.linking[" + std::to_string(k) + "]";
            int i = need(lj[k], "i", path).get<int>() - 1;
            int jj = need(lj[k], "j", path).get<int>() - 1;
            entries.emplace_back(i, jj, scalar_at(F, need(lj[k], "lambda", path), path + ".lambda"));
        }
    }
    LinkingData lam = validate_linking(d, entries);
    return {std::move(d), std::move(lam)};
}

Json datum_to_json(const CartanDatum& d, const LinkingData& lam) {
    Json j;
    j["field"] = field_to_json(*d.ctx());
    j["group"] = group_to_json(d.group());
    Json gj = Json::array();
    for (int i = 0; i < d.theta(); ++i) gj.push_back(d.g(i).exps());
    j["g"] = std::move(gj);
    Json cj = Json::array();
    for (int i = 0; i < d.theta(); ++i) cj.push_back(character_to_json(d.chi(i)));
    j["chi"] = std::move(cj);
    Json mj = Json::array();
    for (int i = 0; i < d.theta(); ++i) {
        Json row = Json::array();
        for (int k = 0; k < d.theta(); ++k) row.push_back(d.cartan().entry(i, k));
        mj.push_back(std::move(row));
    }
    j["cartan"] = std::move(mj);
    Json lj = Json::array();
    for (auto [a, b] : lam.linked_pairs()) {
        Json e;
        e["i"] = a + 1;
        e["j"] = b + 1;
        e["lambda"] = lam.lambda(d, a, b).to_string();
        lj.push_back(std::move(e));
    }
    j["linking"] = std::move(lj);
    return j;
}

ReducedDatum reduced_from_json(const Json& j) {
    FieldCtx F = field_from_json(need(j, "field", "$"));
    FgAbelianGroup grp = group_from_json(need(j, "group", "$"));
    auto elems = [&](const char* key) {
        const Json& ej = need(j, key, "$");
        std::vector<GroupElement> out;
        for (size_t i = 0; i < ej.size(); ++i)
            out.emplace_back(grp, exps_at(grp, ej[i], std::string("$.") + key + "[" + std::to_string(i) + "]"));
        return out;
    };
    std::vector<GroupElement> L = elems("L"), K = elems("K");
    const Json& cj = need(j, "chi", "$");
    std::vector<Character> chi;
    for (size_t i = 0; i < cj.size(); ++i)
        chi.push_back(character_from_json(F, grp, cj[i], "$.chi[" + std::to_string(i) + "]"));
    CartanMatrix cm = cartan_from_json(need(j, "cartan", "$"), "$.cartan");
    std::vector<Scalar> l;
    const Json& lj = need(j, "l", "$");
    for (size_t i = 0; i < lj.size(); ++i)
        l.push_back(scalar_at(F, lj[i], "$.l[" + std::to_string(i) + "]"));
    return make_reduced(F, grp, std::move(L), std::move(K), std::move(chi), std::move(cm),
                        std::move(l));
}

Json reduced_to_json(const ReducedDatum& rd) {
    Json j;
    j["field"] = field_to_json(*rd.F);
    j["group"] = group_to_json(rd.group);
    Json Lj = Json::array(), Kj = Json::array(), cj = Json::array(), lj = Json::array();
    for (int i = 0; i < rd.n(); ++i) {
        Lj.push_back(rd.L[static_cast<size_t>(i)].exps());
        Kj.push_back(rd.K[static_cast<size_t>(i)].exps());
        cj.push_back(character_to_json(rd.chi[static_cast<size_t>(i)]));
        lj.push_back(rd.l[static_cast<size_t>(i)].to_string());
    }
    j["L"] = std::move(Lj);
    j["K"] = std::move(Kj);
    j["chi"] = std::move(cj);
    Json mj = Json::array();
    for (int i = 0; i < rd.n(); ++i) {
        Json row = Json::array();
        for (int k = 0; k < rd.n(); ++k) row.push_back(rd.cartan.entry(i, k));
        mj.push_back(std::move(row));
    }
    j["cartan"] = std::move(mj);
    j["l"] = std::move(lj);
    return j;
}

namespace {

Json mat_to_json(const Mat& m) {
    Json j = Json::array();
    for (const auto& row : m) {
        Json r = Json::array();
        for (const auto& x : row) r.push_back(x.to_string());
        j.push_back(std::move(r));
    }
    return j;
}

Mat mat_from_json(FieldCtx F, const Json& j, const std::string& path) {
    Mat m;
    for (size_t r = 0; r < j.size(); ++r) {
        Vec row;
        for (size_t c = 0; c < j[r].size(); ++c)
            row.push_back(scalar_at(F, j[r][c], path + "[" + std::to_string(r) + "][" +
                                                    std::to_string(c) + "]"));
        m.push_back(std::move(row));
    }
    return m;
}

} // namespace

Json rep_to_json(const ModuleRep& rep) {
    Json j;
    j["field"] = field_to_json(*rep.F);
    j["group"] = group_to_json(rep.group);
    j["form"] = rep.full_datum_form ? "datum" : "reduced";
    j["dim"] = rep.dim();
    Json chij = Json::array();
    for (const auto& v : rep.chi_values) chij.push_back(v.to_string());
    j["chi"] = std::move(chij);
    j["m"] = rep.m_exponents;
    j["basis"] = rep.basis_labels;
    j["highest"] = rep.highest_index + 1;
    Json dj = Json::array();
    for (const auto& d : rep.multidegree) dj.push_back(d);
    j["multidegree"] = std::move(dj);
    Json wj = Json::array();
    for (const auto& w : rep.weights) {
        Json r = Json::array();
        for (const auto& v : w) r.push_back(v.to_string());
        wj.push_back(std::move(r));
    }
    j["weights"] = std::move(wj);
    if (!rep.L_elems.empty()) {
        Json Lj = Json::array(), Kj = Json::array();
        for (const auto& e : rep.L_elems) Lj.push_back(e.exps());
        for (const auto& e : rep.K_elems) Kj.push_back(e.exps());
        j["L"] = std::move(Lj);
        j["K"] = std::move(Kj);
    }
    Json mats;
    for (size_t k = 0; k < rep.gamma_mats.size(); ++k)
        mats["g" + std::to_string(k + 1)] = mat_to_json(rep.gamma_mats[k]);
    for (size_t i = 0; i < rep.x_mats.size(); ++i)
        mats["x" + std::to_string(i + 1)] = mat_to_json(rep.x_mats[i]);
    for (size_t i = 0; i < rep.y_mats.size(); ++i)
        mats["y" + std::to_string(i + 1)] = mat_to_json(rep.y_mats[i]);
    j["matrices"] = std::move(mats);
    return j;
}

ModuleRep rep_from_json(const Json& j) {
    ModuleRep rep;
    rep.F = field_from_json(need(j, "field", "$"));
    rep.group = group_from_json(need(j, "group", "$"));
    rep.full_datum_form = need(j, "form", "$").get<std::string>() == "datum";
    for (const auto& s : need(j, "basis", "$")) rep.basis_labels.push_back(s.get<std::string>());
    rep.highest_index = need(j, "highest", "$").get<int>() - 1;
    for (const auto& v : need(j, "chi", "$"))
        rep.chi_values.push_back(Scalar::parse(rep.F, v.get<std::string>()));
    for (const auto& v : need(j, "m", "$")) rep.m_exponents.push_back(v.get<long>());
    for (const auto& d : need(j, "multidegree", "$"))
        rep.multidegree.push_back(d.get<std::vector<long>>());
    for (const auto& w : need(j, "weights", "$")) {
        std::vector<Scalar> row;
        for (const auto& v : w) row.push_back(Scalar::parse(rep.F, v.get<std::string>()));
        rep.weights.push_back(std::move(row));
    }
    if (j.contains("L")) {
        for (const auto& e : j.at("L")) rep.L_elems.emplace_back(rep.group, e.get<std::vector<long>>());
        for (const auto& e : j.at("K")) rep.K_elems.emplace_back(rep.group, e.get<std::vector<long>>());
    }
    const Json& mats = need(j, "matrices", "$");
    for (int k = 1; mats.contains("g" + std::to_string(k)); ++k)
        rep.gamma_mats.push_back(mat_from_json(rep.F, mats.at("g" + std::to_string(k)),
                                               "$.matrices.g" + std::to_string(k)));
    for (int i = 1; mats.contains("x" + std::to_string(i)); ++i)
        rep.x_mats.push_back(mat_from_json(rep.F, mats.at("x" + std::to_string(i)),
                                           "$.matrices.x" + std::to_string(i)));
    for (int i = 1; mats.contains("y" + std::to_string(i)); ++i)
        rep.y_mats.push_back(mat_from_json(rep.F, mats.at("y" + std::to_string(i)),
                                           "$.matrices.y" + std::to_string(i)));
    return rep;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Err::Io, "cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        fail(Err::ParseError, path + ": " + e.what());
    }
    return j;
}

void save_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) fail(Err::Io, "cannot write " + path);
    out << j.dump(2) << "\n";
}

} // namespace uqmod
