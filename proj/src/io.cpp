#include "homleib/io.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace homleib {

namespace {

using nlohmann::json;

void expectKeys(const json &j, const std::string &where,
                const std::set<std::string> &required,
                const std::set<std::string> &optional = {}) {
    if (!j.is_object())
        throw InputError(where + ": expected an object");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!required.count(it.key()) && !optional.count(it.key()))
            throw InputError(where + ": unknown field \"" + it.key() + "\"");
    for (const auto &k : required)
        if (!j.contains(k))
            throw InputError(where + ": missing field \"" + k + "\"");
}

Rational scalarAt(const json &j, const std::string &where) {
    if (j.is_number_integer())
        return Rational(j.get<long long>());
    if (j.is_string())
        return parseRational(j.get<std::string>(), where);
    throw InputError(where + ": expected a rational string or integer");
}

std::size_t dimAt(const json &j, const std::string &where) {
    if (!j.is_number_unsigned() || j.get<std::size_t>() == 0)
        throw InputError(where + ": expected a positive integer dimension");
    return j.get<std::size_t>();
}

QVec vecAt(const json &j, std::size_t len, const std::string &where) {
    if (!j.is_array() || j.size() != len)
        throw InputError(where + ": expected an array of length " +
                         std::to_string(len));
    QVec v(len, Rational(0));
    for (std::size_t i = 0; i < len; ++i)
        v[i] = scalarAt(j[i], where + "[" + std::to_string(i) + "]");
    return v;
}

QMatrix matrixAt(const json &j, std::size_t rows, std::size_t cols,
                 const std::string &where) {
    if (!j.is_array() || j.size() != rows)
        throw InputError(where + ": expected " + std::to_string(rows) + " rows");
    QMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        QVec row = vecAt(j[r], cols, where + "[" + std::to_string(r) + "]");
        for (std::size_t c = 0; c < cols; ++c)
            m.at(r, c) = row[c];
    }
    return m;
}

// t[i][j] = coefficient vector of e_i * e_j
Tensor3<Rational> tensorAt(const json &j, std::size_t d0, std::size_t d1,
                           std::size_t d2, const std::string &where) {
    if (!j.is_array() || j.size() != d0)
        throw InputError(where + ": expected " + std::to_string(d0) + " rows");
    Tensor3<Rational> t(d0, d1, d2);
    for (std::size_t i = 0; i < d0; ++i) {
        const json &row = j[i];
        std::string wr = where + "[" + std::to_string(i) + "]";
        if (!row.is_array() || row.size() != d1)
            throw InputError(wr + ": expected " + std::to_string(d1) + " entries");
        for (std::size_t p = 0; p < d1; ++p) {
            QVec v = vecAt(row[p], d2, wr + "[" + std::to_string(p) + "]");
            for (std::size_t k = 0; k < d2; ++k)
                t.at(i, p, k) = v[k];
        }
    }
    return t;
}

void feed(std::uint64_t &h, const std::string &s) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
}

void feed(std::uint64_t &h, const QMatrix &m) {
    feed(h, std::to_string(m.rows) + "x" + std::to_string(m.cols) + ":");
    for (const auto &x : m.a)
        feed(h, rationalToString(x) + ",");
}

void feed(std::uint64_t &h, const Tensor3<Rational> &t) {
    feed(h, std::to_string(t.d0) + "x" + std::to_string(t.d1) + "x" +
                std::to_string(t.d2) + ":");
    for (const auto &x : t.a)
        feed(h, rationalToString(x) + ",");
}

} // namespace

Instance parseInstanceText(const std::string &text, const std::string &where) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw InputError(where + ": " + e.what());
    }
    expectKeys(j, where, {"field", "g", "M", "f"}, {"rep", "cochain", "pair"});
    if (!j["field"].is_string() || j["field"].get<std::string>() != "Q")
        throw InputError(where + ".field: only \"Q\" is supported");

    Instance inst;
    const json &g = j["g"];
    expectKeys(g, where + ".g", {"dim", "alpha", "product"}, {"labels", "handedness"});
    const std::size_t n = dimAt(g["dim"], where + ".g.dim");
    inst.object.algebra.space.dim = n;
    if (g.contains("labels")) {
        if (!g["labels"].is_array() || g["labels"].size() != n)
            throw InputError(where + ".g.labels: expected " + std::to_string(n) +
                             " labels");
        for (const auto &l : g["labels"])
            inst.object.algebra.space.labels.push_back(l.get<std::string>());
    }
    inst.object.algebra.space.twist = matrixAt(g["alpha"], n, n, where + ".g.alpha");
    inst.object.algebra.product = tensorAt(g["product"], n, n, n, where + ".g.product");
    inst.object.algebra.handedness = Handedness::Left;
    if (g.contains("handedness")) {
        std::string h = g["handedness"].is_string() ? g["handedness"].get<std::string>()
                                                    : std::string();
        if (h == "right")
            inst.object.algebra.handedness = Handedness::Right;
        else if (h != "left")
            throw InputError(where + ".g.handedness: expected \"left\" or \"right\"");
    }

    const json &M = j["M"];
    expectKeys(M, where + ".M", {"dim", "alphaM", "left", "right"}, {"labels"});
    const std::size_t m = dimAt(M["dim"], where + ".M.dim");
    inst.object.module.space.dim = m;
    if (M.contains("labels")) {
        if (!M["labels"].is_array() || M["labels"].size() != m)
            throw InputError(where + ".M.labels: expected " + std::to_string(m) +
                             " labels");
        for (const auto &l : M["labels"])
            inst.object.module.space.labels.push_back(l.get<std::string>());
    }
    inst.object.module.space.twist = matrixAt(M["alphaM"], m, m, where + ".M.alphaM");
    inst.object.module.left = tensorAt(M["left"], n, m, m, where + ".M.left");
    inst.object.module.right = tensorAt(M["right"], m, n, m, where + ".M.right");
    inst.object.anchor = matrixAt(j["f"], n, m, where + ".f");

    std::size_t v = m, w = n; // adjoint shapes unless a rep section overrides
    if (j.contains("rep")) {
        const json &rj = j["rep"];
        expectKeys(rj, where + ".rep",
                   {"V", "W", "phi", "vLeft", "vRight", "wLeft", "wRight", "crossR",
                    "crossL"});
        QLMRepresentation r;
        expectKeys(rj["V"], where + ".rep.V", {"dim", "alphaV"});
        expectKeys(rj["W"], where + ".rep.W", {"dim", "alphaW"});
        v = dimAt(rj["V"]["dim"], where + ".rep.V.dim");
        w = dimAt(rj["W"]["dim"], where + ".rep.W.dim");
        r.vSpace.dim = v;
        r.vSpace.twist = matrixAt(rj["V"]["alphaV"], v, v, where + ".rep.V.alphaV");
        r.wSpace.dim = w;
        r.wSpace.twist = matrixAt(rj["W"]["alphaW"], w, w, where + ".rep.W.alphaW");
        r.phi = matrixAt(rj["phi"], w, v, where + ".rep.phi");
        r.vLeft = tensorAt(rj["vLeft"], n, v, v, where + ".rep.vLeft");
        r.vRight = tensorAt(rj["vRight"], v, n, v, where + ".rep.vRight");
        r.wLeft = tensorAt(rj["wLeft"], n, w, w, where + ".rep.wLeft");
        r.wRight = tensorAt(rj["wRight"], w, n, w, where + ".rep.wRight");
        r.crossR = tensorAt(rj["crossR"], w, m, v, where + ".rep.crossR");
        r.crossL = tensorAt(rj["crossL"], m, w, v, where + ".rep.crossL");
        inst.rep = std::move(r);
    }
    if (j.contains("cochain")) {
        const json &cj = j["cochain"];
        expectKeys(cj, where + ".cochain", {"omega", "mu", "nu", "theta"});
        Cochain2 c;
        c.omega = tensorAt(cj["omega"], n, n, w, where + ".cochain.omega");
        c.mu = tensorAt(cj["mu"], n, m, v, where + ".cochain.mu");
        c.nu = tensorAt(cj["nu"], m, n, v, where + ".cochain.nu");
        c.theta = matrixAt(cj["theta"], w, m, where + ".cochain.theta");
        inst.cochain = std::move(c);
    }
    if (j.contains("pair")) {
        const json &pj = j["pair"];
        expectKeys(pj, where + ".pair", {"n0", "n1"});
        NijenhuisPair p;
        p.n0 = matrixAt(pj["n0"], n, n, where + ".pair.n0");
        p.n1 = matrixAt(pj["n1"], m, m, where + ".pair.n1");
        inst.pair = std::move(p);
    }

    // canonical content digest, independent of formatting
    std::uint64_t h = 0xcbf29ce484222325ULL;
    feed(h, "g:");
    feed(h, inst.object.algebra.space.twist);
    feed(h, inst.object.algebra.product);
    feed(h, inst.object.algebra.handedness == Handedness::Left ? "L" : "R");
    feed(h, "M:");
    feed(h, inst.object.module.space.twist);
    feed(h, inst.object.module.left);
    feed(h, inst.object.module.right);
    feed(h, "f:");
    feed(h, inst.object.anchor);
    if (inst.rep) {
        feed(h, "rep:");
        feed(h, inst.rep->vSpace.twist);
        feed(h, inst.rep->wSpace.twist);
        feed(h, inst.rep->phi);
        feed(h, inst.rep->vLeft);
        feed(h, inst.rep->vRight);
        feed(h, inst.rep->wLeft);
        feed(h, inst.rep->wRight);
        feed(h, inst.rep->crossR);
        feed(h, inst.rep->crossL);
    }
    if (inst.cochain) {
        feed(h, "cochain:");
        feed(h, inst.cochain->omega);
        feed(h, inst.cochain->mu);
        feed(h, inst.cochain->nu);
        feed(h, inst.cochain->theta);
    }
    if (inst.pair) {
        feed(h, "pair:");
        feed(h, inst.pair->n0);
        feed(h, inst.pair->n1);
    }
    inst.digest = h;
    return inst;
}

Instance parseInstance(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw InputError(path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parseInstanceText(ss.str(), path);
}

QLMRepresentation effectiveRep(const Instance &inst) {
    if (inst.rep)
        return *inst.rep;
    return adjointRepresentation(inst.object);
}

std::string digestToHex(std::uint64_t d) {
    static const char *hex = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = hex[d & 0xf];
        d >>= 4;
    }
    return s;
}

} // namespace homleib
