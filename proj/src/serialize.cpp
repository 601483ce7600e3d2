#include "dgkernel/serialize.hpp"

#include <sstream>

namespace dgk {

Json field_to_json(const Field& f)
{
    Json j;
    j["kind"] = f.is_rationals() ? "rationals" : "prime_field";
    j["characteristic"] = f.characteristic();
    return j;
}

Json vec_to_json(const Vec& v)
{
    Json j = Json::array();
    for (const auto& s : v)
        j.push_back(s.to_string());
    return j;
}

Json subspace_to_json(const GradedSubspace& s)
{
    Json j = Json::object();
    for (int d : s.support()) {
        Json rows = Json::array();
        const Matrix b = s.basis(d);
        for (std::size_t r = 0; r < b.rows(); ++r)
            rows.push_back(vec_to_json(b.row(r)));
        j[std::to_string(d)] = rows;
    }
    return j;
}

Json algebra_to_json(const DGAlgebra& a)
{
    Json j;
    j["field"] = field_to_json(a.field());
    Json basis = Json::array();
    for (const auto& b : a.basis())
        basis.push_back(Json{{"name", b.name}, {"degree", b.degree}});
    j["basis"] = basis;
    j["unit"] = vec_to_json(a.unit());
    Json mul = Json::array();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < a.dim(); ++k)
            row.push_back(vec_to_json(a.mul_entry(i, k)));
        mul.push_back(row);
    }
    j["mul"] = mul;
    Json diff = Json::array();
    for (std::size_t i = 0; i < a.dim(); ++i)
        diff.push_back(vec_to_json(a.diff_entry(i)));
    j["diff"] = diff;
    return j;
}

Json module_to_json(const DGModule& m)
{
    Json j;
    j["field"] = field_to_json(m.field());
    j["algebra"] = algebra_to_json(m.algebra());
    Json basis = Json::array();
    for (const auto& b : m.basis())
        basis.push_back(Json{{"name", b.name}, {"degree", b.degree}});
    j["basis"] = basis;
    Json action = Json::array();
    for (std::size_t i = 0; i < m.algebra().dim(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.dim(); ++k)
            row.push_back(vec_to_json(m.action_entry(i, k)));
        action.push_back(row);
    }
    j["action"] = action;
    Json delta = Json::array();
    for (std::size_t i = 0; i < m.dim(); ++i)
        delta.push_back(vec_to_json(m.delta_entry(i)));
    j["delta"] = delta;
    return j;
}

Json laurent_to_json(const TwistedLaurentDGA& l)
{
    Json j;
    j["field"] = field_to_json(l.field());
    j["r0"] = algebra_to_json(l.r0());
    Json sigma = Json::array();
    for (std::size_t r = 0; r < l.sigma().rows(); ++r)
        sigma.push_back(vec_to_json(l.sigma().row(r)));
    j["sigma"] = sigma;
    j["degX"] = l.gen_degree();
    Json dx = Json::array();
    for (const auto& [k, v] : l.dx().terms())
        dx.push_back(Json{{"power", k}, {"coeff", vec_to_json(v)}});
    j["dX"] = dx;
    return j;
}

std::string algebra_hash(const DGAlgebra& a)
{
    return content_hash(algebra_to_json(a).dump());
}

std::string module_hash(const DGModule& m)
{
    return content_hash(module_to_json(m).dump());
}

namespace {

bool plain_identifier(const std::string& s)
{
    if (s.empty() || (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_'))
        return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
            return false;
    return true;
}

std::string basis_ref(const std::string& name)
{
    return plain_identifier(name) ? name : "\"" + name + "\"";
}

std::string lincomb_text(const DGAlgebra& a, const Vec& v)
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < a.dim(); ++k) {
        if (v[k].is_zero())
            continue;
        Scalar c = v[k];
        std::string sign = first ? "" : " + ";
        if (!first && a.field().is_rationals() && c.rational() < 0) {
            sign = " - ";
            c = -c;
        }
        os << sign << c.to_dsl_string();
        os << "*" << basis_ref(a.basis()[k].name);
        first = false;
    }
    if (first)
        os << "0";
    return os.str();
}

} // namespace

std::string algebra_to_dsl(const DGAlgebra& a, const std::string& name,
                           const std::string& field_name)
{
    std::ostringstream os;
    os << "algebra " << name << " over " << field_name << " {\n";
    os << "  basis ";
    for (std::size_t i = 0; i < a.dim(); ++i)
        os << (i ? ", " : "") << basis_ref(a.basis()[i].name) << ":" << a.degree_of(i);
    os << " ;\n";
    // the unit must be a single basis vector for the plain declaration form
    std::optional<std::size_t> unit_index;
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (a.unit()[i].is_one()) {
            bool only = true;
            for (std::size_t k = 0; k < a.dim(); ++k)
                if (k != i && !a.unit()[k].is_zero())
                    only = false;
            if (only)
                unit_index = i;
        }
    if (!unit_index)
        throw std::invalid_argument("algebra_to_dsl: unit is not a single basis vector");
    os << "  unit " << basis_ref(a.basis()[*unit_index].name) << " ;\n";
    os << "  mul default zero ;\n";
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (!is_zero_vec(a.mul_entry(i, j)))
                os << "  mul " << basis_ref(a.basis()[i].name) << "*"
                   << basis_ref(a.basis()[j].name) << " = " << lincomb_text(a, a.mul_entry(i, j))
                   << " ;\n";
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (!is_zero_vec(a.diff_entry(i)))
            os << "  d " << basis_ref(a.basis()[i].name) << " = "
               << lincomb_text(a, a.diff_entry(i)) << " ;\n";
    os << "}\n";
    return os.str();
}

std::string laurent_to_dsl(const TwistedLaurentDGA& l, const std::string& name,
                           const std::string& field_name, const std::string& r0_name)
{
    std::ostringstream os;
    os << algebra_to_dsl(l.r0(), r0_name, field_name);
    os << "laurent " << name << " over " << field_name << " {\n";
    os << "  r0 = " << r0_name << " ;\n";
    os << "  sigma = [";
    for (std::size_t r = 0; r < l.sigma().rows(); ++r) {
        os << (r ? "; " : "");
        for (std::size_t c = 0; c < l.sigma().cols(); ++c)
            os << (c ? ", " : "") << l.sigma().at(r, c).to_dsl_string();
    }
    os << "] ;\n";
    os << "  degX = " << l.gen_degree() << " ;\n";
    os << "  dX = ";
    if (l.dx().is_zero()) {
        os << "0";
    } else {
        bool first = true;
        for (const auto& [k, v] : l.dx().terms())
            for (std::size_t i = 0; i < l.r0().dim(); ++i) {
                if (v[i].is_zero())
                    continue;
                os << (first ? "" : " + ") << v[i].to_dsl_string() << "*"
                   << basis_ref(l.r0().basis()[i].name) << "*X^" << k;
                first = false;
            }
    }
    os << " ;\n}\n";
    return os.str();
}

} // namespace dgk
