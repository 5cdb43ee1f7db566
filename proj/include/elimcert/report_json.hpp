/*
   Copyright 2026 The elimcert authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef ELIMCERT_REPORT_JSON_HPP
#define ELIMCERT_REPORT_JSON_HPP

#include <json.hpp>

#include "elimcert/engine.hpp"
#include "elimcert/io.hpp"

namespace elimcert {

inline constexpr int kSchemaVersion = 1;

inline nlohmann::json field_to_json(const FieldDesc& desc) {
    if (desc.kind == FieldKind::Rationals)
        return nlohmann::json{{"kind", "q"}};
    return nlohmann::json{{"kind", "fp"}, {"modulus", desc.modulus}};
}

inline FieldDesc field_from_json(const nlohmann::json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "q")
        return FieldDesc::rationals();
    if (kind == "fp")
        return FieldDesc::prime_field(j.at("modulus").get<std::uint64_t>(), 2);
    throw StructuralError("unknown field kind '" + kind + "'");
}

template <class K>
K scalar_from_string(const std::string& s, const FieldDesc& desc);

template <>
inline Rational scalar_from_string<Rational>(const std::string& s, const FieldDesc&) {
    try {
        return Rational::from_mpq(mpq_class(s));
    } catch (const std::invalid_argument&) {
        throw StructuralError("bad rational literal '" + s + "'");
    }
}

template <>
inline Fp scalar_from_string<Fp>(const std::string& s, const FieldDesc& desc) {
    const std::uint64_t p = desc.modulus;
    std::uint64_t v = 0;
    bool neg = false;
    std::size_t i = 0;
    if (i < s.size() && s[i] == '-') {
        neg = true;
        ++i;
    }
    if (i == s.size())
        throw StructuralError("bad residue literal '" + s + "'");
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw StructuralError("bad residue literal '" + s + "'");
        v = (static_cast<std::uint64_t>((static_cast<unsigned __int128>(v) * 10) % p) +
             static_cast<std::uint64_t>(s[i] - '0')) %
            p;
    }
    Fp r(v, p);
    return neg ? -r : r;
}

inline std::string change_kind_name(ChangeKind kind) {
    switch (kind) {
    case ChangeKind::Identity: return "identity";
    case ChangeKind::Dense: return "dense";
    case ChangeKind::UnipotentT: return "unipotent-t";
    }
    return "?";
}

template <class K>
nlohmann::json change_to_json(const CoordinateChange<K>& c) {
    nlohmann::json j;
    j["kind"] = change_kind_name(c.kind);
    j["n"] = c.n;
    if (c.kind == ChangeKind::Dense) {
        nlohmann::json m = nlohmann::json::array(), mi = nlohmann::json::array();
        for (const auto& row : c.fwd) {
            nlohmann::json r = nlohmann::json::array();
            for (const auto& a : row)
                r.push_back(a.str());
            m.push_back(std::move(r));
        }
        for (const auto& row : c.inv) {
            nlohmann::json r = nlohmann::json::array();
            for (const auto& a : row)
                r.push_back(a.str());
            mi.push_back(std::move(r));
        }
        j["matrix"] = std::move(m);
        j["inverse"] = std::move(mi);
    } else if (c.kind == ChangeKind::UnipotentT) {
        nlohmann::json m = nlohmann::json::array(), mi = nlohmann::json::array();
        for (const auto& row : c.tfwd) {
            nlohmann::json r = nlohmann::json::array();
            for (const auto& a : row)
                r.push_back(a.str());
            m.push_back(std::move(r));
        }
        for (const auto& row : c.tinv) {
            nlohmann::json r = nlohmann::json::array();
            for (const auto& a : row)
                r.push_back(a.str());
            mi.push_back(std::move(r));
        }
        j["matrix"] = std::move(m);
        j["inverse"] = std::move(mi);
    }
    return j;
}

// Rebuilds the parts of a coordinate change that verification needs. Dense
// matrices are parsed back exactly; unipotent-t matrices are audit data for
// original-coords certificates (which verify untransformed), so only the kind
// survives the round trip.
template <class K>
CoordinateChange<K> change_from_json(const nlohmann::json& j, const FieldDesc& desc) {
    const std::string kind = j.at("kind").get<std::string>();
    const int n = j.at("n").get<int>();
    if (kind == "identity")
        return CoordinateChange<K>::identity(n, desc);
    CoordinateChange<K> c;
    c.n = n;
    c.desc = desc;
    if (kind == "dense") {
        c.kind = ChangeKind::Dense;
        for (const auto& row : j.at("matrix")) {
            c.fwd.emplace_back();
            for (const auto& cell : row)
                c.fwd.back().push_back(scalar_from_string<K>(cell.get<std::string>(), desc));
        }
        for (const auto& row : j.at("inverse")) {
            c.inv.emplace_back();
            for (const auto& cell : row)
                c.inv.back().push_back(scalar_from_string<K>(cell.get<std::string>(), desc));
        }
        return c;
    }
    if (kind == "unipotent-t") {
        c.kind = ChangeKind::UnipotentT;
        return c;
    }
    throw StructuralError("unknown coordinate change kind '" + kind + "'");
}

inline nlohmann::json items_to_json(const VerifyReport& rep) {
    nlohmann::json items = nlohmann::json::array();
    for (const auto& it : rep.items) {
        nlohmann::json j{{"name", it.name}, {"pass", it.pass}};
        if (!it.detail.empty())
            j["detail"] = it.detail;
        items.push_back(std::move(j));
    }
    return items;
}

// Full machine-readable certificate, as emitted by the eliminate command and
// accepted back by certify-check.
template <class K>
nlohmann::json certificate_to_json(const Certificate<K>& cert, const std::vector<MPoly<K>>& gens,
                                   const VerifyReport& rep) {
    nlohmann::json j;
    j["schemaVersion"] = kSchemaVersion;
    j["command"] = "eliminate";
    j["field"] = field_to_json(cert.phi.field());
    j["n"] = cert.phi.nvars();
    j["s"] = gens.size();
    j["q"] = cert.q;
    std::vector<long> ds;
    for (const auto& g : gens)
        if (!g.is_zero())
            ds.push_back(*g.total_degree());
    std::sort(ds.rbegin(), ds.rend());
    j["degrees"] = ds;
    j["bound"] = cert.bound;
    j["seed"] = cert.seed;
    j["mode"] = mode_name(cert.mode);
    j["phi"] = render_poly(cert.phi);
    j["degPhi"] = rep.deg_phi;
    nlohmann::json cof = nlohmann::json::array();
    for (const auto& g : cert.cofactors)
        cof.push_back(render_poly(g));
    j["cofactors"] = std::move(cof);
    j["maxCofactorProductDegree"] = rep.max_product_degree;
    j["coordinateChange"] = change_to_json(cert.change);
    j["verified"] = rep.verdict;
    j["items"] = items_to_json(rep);
    j["timingsMs"] = nlohmann::json{{"total", cert.stats.total_ms},
                                    {"dimension", cert.stats.dimension_ms},
                                    {"elimination", cert.stats.elimination_ms}};
    nlohmann::json bs{{"dimension", cert.stats.dimension_basis_size},
                      {"elimination", cert.stats.elimination_basis_size}};
    j["basisSizes"] = std::move(bs);
    j["retriesUsed"] = cert.stats.retries_used;
    if (cert.mode == PipelineMode::OriginalCoords) {
        j["deformationInitialValuation"] = cert.stats.deformation_initial_valuation;
        j["deformationSteps"] = cert.stats.deformation_steps;
    }
    return j;
}

template <class K>
Certificate<K> certificate_from_json(const nlohmann::json& j, const FieldDesc& desc, int n) {
    Certificate<K> cert;
    cert.q = j.at("q").get<int>();
    cert.bound = j.at("bound").get<long>();
    cert.seed = j.value("seed", std::uint64_t{0});
    const std::string mode = j.at("mode").get<std::string>();
    if (mode == "generic")
        cert.mode = PipelineMode::GenericCoords;
    else if (mode == "original")
        cert.mode = PipelineMode::OriginalCoords;
    else
        throw StructuralError("unknown mode '" + mode + "'");
    const TermOrder grev = TermOrder::grevlex();
    cert.phi = parse_poly<K>(j.at("phi").get<std::string>(), desc, n, grev);
    for (const auto& c : j.at("cofactors"))
        cert.cofactors.push_back(parse_poly<K>(c.get<std::string>(), desc, n, grev));
    if (j.contains("coordinateChange"))
        cert.change = change_from_json<K>(j.at("coordinateChange"), desc);
    else
        cert.change = CoordinateChange<K>::identity(n, desc);
    return cert;
}

} // namespace elimcert

#endif
