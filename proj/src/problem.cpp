#include "toric_zeta/problem.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace toric_zeta {

using nlohmann::ordered_json;

namespace {

const char* kBanner =
    "valid under the non-degeneracy hypothesis on the input polynomials";

const ordered_json& need(const ordered_json& o, const char* key) {
    if (!o.is_object() || !o.contains(key))
        throw ParseError(std::string("missing field: ") + key);
    return o.at(key);
}

Int json_int(const ordered_json& v, const char* what) {
    if (!v.is_number_integer())
        throw ParseError(std::string(what) + " must be an integer");
    return Int(static_cast<long>(v.get<long long>()));
}

Vec json_vec(const ordered_json& v, const char* what) {
    if (!v.is_array())
        throw ParseError(std::string(what) + " must be an array of integers");
    Vec out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(json_int(x, what));
    return out;
}

Rat parse_rational(const std::string& s) {
    try {
        std::size_t slash = s.find('/');
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw ParseError("invalid rational: " + s);
        Rat r(num, den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw ParseError("invalid rational: " + s);
    }
}

Rat json_rational(const ordered_json& v, const char* what) {
    if (!v.is_string())
        throw ParseError(std::string(what) +
                         " must be a rational written as a string");
    return parse_rational(v.get<std::string>());
}

RatMat json_matrix(const ordered_json& v) {
    if (!v.is_array()) throw ParseError("matrix must be an array of rows");
    RatMat m;
    for (const auto& row : v) {
        if (!row.is_array())
            throw ParseError("matrix row must be an array");
        std::vector<Rat> r;
        for (const auto& x : row) r.push_back(json_rational(x, "matrix entry"));
        m.push_back(std::move(r));
    }
    return m;
}

NamedPolynomial parse_polynomial(const ordered_json& v,
                                 std::size_t ambient_dim) {
    NamedPolynomial np;
    const ordered_json& name = need(v, "name");
    if (!name.is_string()) throw ParseError("name must be a string");
    np.name = name.get<std::string>();
    const ordered_json& terms = need(v, "terms");
    if (!terms.is_array()) throw ParseError("terms must be an array");
    std::vector<std::pair<Vec, Rat>> list;
    for (const auto& t : terms) {
        Vec e = json_vec(need(t, "exponent"), "exponent");
        if (e.size() != ambient_dim)
            throw ParseError("exponent length must equal ambient_dim");
        list.emplace_back(std::move(e),
                          json_rational(need(t, "coefficient"), "coefficient"));
    }
    np.poly = make_toric_polynomial(list);
    return np;
}

std::string face_key_string(const std::vector<std::size_t>& key) {
    std::string s = "{";
    for (std::size_t i = 0; i < key.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(key[i]);
    }
    return s + "}";
}

std::string rat_str(const Rat& r) { return r.get_str(); }

ordered_json poly_coeffs(const Poly& p) {
    ordered_json a = ordered_json::array();
    for (const Rat& c : p) a.push_back(rat_str(c));
    return a;
}

ordered_json vec_json(const Vec& v) {
    ordered_json a = ordered_json::array();
    for (const Int& x : v) a.push_back(to_int64(x));
    return a;
}

ordered_json report_json(const FaceReport& r, const ProblemFile& pf) {
    ordered_json o;
    o["face"] = r.face_key;
    o["dim"] = r.dim;
    o["skipped"] = r.skipped;
    if (pf.mode == "ci") {
        o["m"] = r.m;
        ordered_json members = ordered_json::array();
        for (std::size_t j : r.ci_members)
            members.push_back(pf.polynomials[j].name);
        o["members"] = members;
    }
    if (r.skipped) {
        o["reason"] = r.skipped_reason;
        return o;
    }
    ordered_json facets = ordered_json::array();
    for (const FacetRecord& f : r.facets) {
        ordered_json fo;
        ordered_json gamma = ordered_json::array();
        for (const Vec& p : f.gamma) gamma.push_back(vec_json(p));
        fo["gamma"] = gamma;
        fo["u"] = vec_json(f.u);
        fo["d"] = to_int64(f.d);
        fo["weight"] = to_int64(f.weight);
        fo["exponent"] = to_int64(f.exponent);
        if (f.is_matrix) fo["det_poly"] = poly_coeffs(f.det_poly);
        facets.push_back(std::move(fo));
    }
    o["facets"] = facets;
    o["orbit_chi"] = to_int64(r.orbit_chi);
    return o;
}

void render_report_text(std::ostringstream& out, const FaceReport& r,
                        const ProblemFile& pf) {
    out << "  face " << face_key_string(r.face_key) << " dim " << r.dim;
    if (pf.mode == "ci") {
        out << " (m = " << r.m << ", members =";
        for (std::size_t i = 0; i < r.ci_members.size(); ++i)
            out << (i ? "," : " ") << pf.polynomials[r.ci_members[i]].name;
        out << ")";
    }
    if (r.skipped) {
        out << ": skipped (" << r.skipped_reason << ")\n";
        return;
    }
    out << ": orbit chi " << to_string(r.orbit_chi) << "\n";
    const char* wlabel = pf.mode == "ci" ? "K" : "vol";
    for (const FacetRecord& f : r.facets) {
        out << "    facet u = " << to_string(f.u) << ", d = " << to_string(f.d)
            << ", " << wlabel << " = " << to_string(f.weight)
            << ", exponent = " << to_string(f.exponent);
        if (f.is_matrix) out << ", det = " << poly_to_string(f.det_poly);
        out << "\n";
    }
}

}  // namespace

ProblemFile parse_problem(const std::string& text,
                          const std::string& mode_override) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("problem file must be an object");

    ProblemFile pf;
    const ordered_json& ad = need(doc, "ambient_dim");
    if (!ad.is_number_integer() || ad.get<long long>() < 1)
        throw ParseError("ambient_dim must be a positive integer");
    pf.ambient_dim = ad.get<std::size_t>();

    const ordered_json& gens = need(doc, "generators");
    if (!gens.is_array() || gens.empty())
        throw ParseError("generators must be a nonempty array");
    for (const auto& g : gens) {
        Vec v = json_vec(g, "generator");
        if (v.size() != pf.ambient_dim)
            throw ParseError("generator length must equal ambient_dim");
        pf.generators.push_back(std::move(v));
    }

    if (!mode_override.empty()) {
        pf.mode = mode_override;
    } else {
        const ordered_json& mode = need(doc, "mode");
        if (!mode.is_string()) throw ParseError("mode must be a string");
        pf.mode = mode.get<std::string>();
    }
    if (pf.mode != "single" && pf.mode != "ci" && pf.mode != "sheaf")
        throw ParseError("unknown mode: " + pf.mode);

    const ordered_json& polys = need(doc, "polynomials");
    if (!polys.is_array() || polys.empty())
        throw ParseError("polynomials must be a nonempty array");
    std::set<std::string> names;
    for (const auto& p : polys) {
        NamedPolynomial np = parse_polynomial(p, pf.ambient_dim);
        if (!names.insert(np.name).second)
            throw ParseError("duplicate polynomial name: " + np.name);
        pf.polynomials.push_back(std::move(np));
    }
    if (pf.mode != "ci" && pf.polynomials.size() != 1)
        throw ParseError("mode " + pf.mode +
                         " requires exactly one polynomial");

    if (pf.mode == "sheaf") {
        const ordered_json& ls = need(doc, "local_system");
        const ordered_json& faces = need(ls, "faces");
        if (!faces.is_array())
            throw ParseError("local_system.faces must be an array");
        for (const auto& entry : faces) {
            const ordered_json& key = need(entry, "face");
            if (!key.is_array())
                throw ParseError("face key must be an array of indices");
            std::vector<std::size_t> k;
            for (const auto& x : key) {
                Int idx = json_int(x, "face index");
                if (idx < 0 ||
                    idx >= Int(static_cast<long>(pf.generators.size())))
                    throw ParseError("face index out of range");
                k.push_back(static_cast<std::size_t>(to_int64(idx)));
            }
            std::sort(k.begin(), k.end());
            k.erase(std::unique(k.begin(), k.end()), k.end());
            const ordered_json& mats = need(entry, "matrices");
            if (!mats.is_array())
                throw ParseError("matrices must be an array");
            std::vector<RatMat> ms;
            for (const auto& m : mats) ms.push_back(json_matrix(m));
            if (!pf.local_system.systems.emplace(std::move(k), std::move(ms))
                     .second)
                throw ParseError("duplicate face key");
        }
    } else if (doc.contains("local_system")) {
        throw ParseError("local_system requires mode \"sheaf\"");
    }
    return pf;
}

ProblemFile load_problem(const std::string& path,
                         const std::string& mode_override) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_problem(buf.str(), mode_override);
}

ordered_json echo_input(const ProblemFile& pf) {
    ordered_json doc;
    doc["ambient_dim"] = pf.ambient_dim;
    ordered_json gens = ordered_json::array();
    for (const Vec& g : pf.generators) gens.push_back(vec_json(g));
    doc["generators"] = gens;
    doc["mode"] = pf.mode;
    ordered_json polys = ordered_json::array();
    for (const NamedPolynomial& np : pf.polynomials) {
        ordered_json p;
        p["name"] = np.name;
        ordered_json terms = ordered_json::array();
        for (const auto& [e, c] : np.poly.terms) {
            ordered_json t;
            t["exponent"] = vec_json(e);
            t["coefficient"] = rat_str(c);
            terms.push_back(std::move(t));
        }
        p["terms"] = terms;
        polys.push_back(std::move(p));
    }
    doc["polynomials"] = polys;
    if (pf.mode == "sheaf") {
        ordered_json faces = ordered_json::array();
        for (const auto& [key, mats] : pf.local_system.systems) {
            ordered_json entry;
            entry["face"] = key;
            ordered_json ms = ordered_json::array();
            for (const RatMat& m : mats) {
                ordered_json rows = ordered_json::array();
                for (const auto& row : m) {
                    ordered_json r = ordered_json::array();
                    for (const Rat& x : row) r.push_back(rat_str(x));
                    rows.push_back(std::move(r));
                }
                ms.push_back(std::move(rows));
            }
            entry["matrices"] = ms;
            faces.push_back(std::move(entry));
        }
        ordered_json ls;
        ls["faces"] = faces;
        doc["local_system"] = ls;
    }
    return doc;
}

RunOutput run_problem(const ProblemFile& pf, const RunOptions& opt) {
    Exec exec = opt.parallel ? Exec::openmp : Exec::serial;
    SemigroupPresentation s = build_presentation(pf.generators, exec);

    if (pf.mode == "sheaf") {
        std::set<std::vector<std::size_t>> known;
        for (const FaceContext& ctx : s.faces)
            known.insert(ctx.face.generator_indices);
        for (const auto& [key, mats] : pf.local_system.systems)
            if (!known.count(key))
                throw ValidationError("local system references unknown face " +
                                      face_key_string(key));
    }

    EngineOptions eo;
    eo.exec = exec;
    eo.log_volumes = opt.check;

    ZetaResult zr;
    if (pf.mode == "single") {
        zr = zeta_fixed_point(s, pf.polynomials[0].poly, eo);
    } else if (pf.mode == "ci") {
        std::vector<ToricPolynomial> fs;
        for (const NamedPolynomial& np : pf.polynomials) fs.push_back(np.poly);
        zr = zeta_complete_intersection(s, fs, eo);
    } else {
        zr = zeta_sheaf(s, pf.polynomials[0].poly, pf.local_system, eo);
    }

    RunOutput out;
    out.chi = degree(zr.zeta);
    RationalFunction rat = to_rational(zr.zeta);
    CheckSummary check;
    if (opt.check) check = replay_volume_events(zr.volume_log, exec);

    if (opt.json) {
        ordered_json doc;
        doc["input"] = echo_input(pf);
        doc["hypothesis"] = kBanner;
        doc["zeta"] = zeta_to_string(zr.zeta);
        ordered_json factors = ordered_json::array();
        for (const auto& [d, e] : zr.zeta.cyclotomic) {
            ordered_json f;
            f["d"] = to_int64(d);
            f["exponent"] = to_int64(e);
            factors.push_back(std::move(f));
        }
        for (const auto& [p, e] : zr.zeta.matrix_factors) {
            ordered_json f;
            f["poly"] = poly_coeffs(p);
            f["exponent"] = to_int64(e);
            factors.push_back(std::move(f));
        }
        doc["factors"] = factors;
        ordered_json ratj;
        ratj["num"] = poly_coeffs(rat.num);
        ratj["den"] = poly_coeffs(rat.den);
        doc["rational"] = ratj;
        doc["reduced"] = rational_to_string(rat);
        doc["chi"] = to_int64(out.chi);
        if (opt.faces) {
            ordered_json reports = ordered_json::array();
            for (const FaceReport& r : zr.reports)
                reports.push_back(report_json(r, pf));
            doc["face_reports"] = reports;
        }
        if (opt.check) {
            ordered_json c;
            c["checked"] = check.checked;
            c["skipped"] = check.skipped;
            doc["check"] = c;
        }
        out.text = doc.dump(2) + "\n";
        return out;
    }

    std::ostringstream text;
    text << "toric-zeta: mode " << pf.mode << ", ambient dimension "
         << pf.ambient_dim << ", " << pf.generators.size() << " generators\n";
    text << kBanner << "\n";
    text << "zeta = " << zeta_to_string(zr.zeta) << "\n";
    text << "reduced = " << rational_to_string(rat) << "\n";
    text << "chi = " << to_string(out.chi) << "\n";
    if (opt.faces) {
        text << "face reports:\n";
        for (const FaceReport& r : zr.reports) render_report_text(text, r, pf);
    }
    if (opt.check) {
        text << "check: " << check.checked << " volumes verified, "
             << check.skipped << " skipped\n";
    }
    out.text = text.str();
    return out;
}

}  // namespace toric_zeta
