#include "resloc/models.hpp"

#include <cctype>

#include "resloc/errors.hpp"
#include "resloc/model_io.hpp"

namespace resloc {

ManifoldModel build_cp1(long long k, TheoryKind theory) {
    if (k < 0) fail(Errc::InvalidModel, "cp1 needs k >= 0");
    ManifoldModel m;
    m.theory = theory;
    m.name = "cp1(k=" + std::to_string(k) + "," + theory_name(theory) + ")";
    FixedComponent plus;
    plus.id = "p+";
    plus.weights = {1};
    plus.restriction = LaurentPolynomial(Rational(1));
    plus.side = Side::Plus;
    FixedComponent minus;
    minus.id = "p-";
    minus.weights = {-1};
    minus.side = Side::Minus;
    if (theory == TheoryKind::KTheory) {
        minus.restriction = LaurentPolynomial::monomial(Rational(1), k);
    } else {
        // (1 + u)^k: the polynomial lift of the degree-k class.
        Polynomial lift{std::vector<Rational>{Rational(1), Rational(1)}};
        minus.restriction = LaurentPolynomial::from_polynomial(lift.pow(static_cast<unsigned long long>(k)));
    }
    m.components = {std::move(plus), std::move(minus)};
    return m;
}

ManifoldModel build_cpn(long long n, long long k) {
    if (n < 1 || k < 0) fail(Errc::InvalidModel, "cpn needs n >= 1 and k >= 0");
    ManifoldModel m;
    m.theory = TheoryKind::KTheory;
    m.name = "cpn(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")";
    for (long long i = 0; i <= n; ++i) {
        FixedComponent c;
        c.id = "p" + std::to_string(i);
        for (long long j = 0; j <= n; ++j)
            if (j != i) c.weights.push_back(j - i);
        c.restriction = LaurentPolynomial::monomial(Rational(1), k * i);
        c.side = i == 0 ? Side::Plus : Side::Minus;
        m.components.push_back(std::move(c));
    }
    return m;
}

ManifoldModel build_product(const ManifoldModel& m1, const ManifoldModel& m2) {
    if (m1.theory != m2.theory)
        fail(Errc::TheoryMismatch, "product of models over different theories");
    ManifoldModel m;
    m.theory = m1.theory;
    m.name = m1.name + " x " + m2.name;
    for (const auto& c1 : m1.components) {
        for (const auto& c2 : m2.components) {
            FixedComponent c;
            c.id = c1.id + "*" + c2.id;
            c.weights = c1.weights;
            c.weights.insert(c.weights.end(), c2.weights.begin(), c2.weights.end());
            c.restriction = c1.restriction * c2.restriction;
            c.side = Side::Unassigned;
            m.components.push_back(std::move(c));
        }
    }
    return m;
}

namespace {

class RecipeParser {
  public:
    explicit RecipeParser(const std::string& text) : s_(text) {}

    ManifoldModel parse() {
        ManifoldModel m = recipe();
        skip_ws();
        if (pos_ != s_.size()) err("trailing input");
        return m;
    }

  private:
    [[noreturn]] void err(const std::string& what) {
        fail(Errc::SyntaxError, "recipe: " + what + " at position " + std::to_string(pos_));
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string ident() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        if (start == pos_) err("expected a name");
        return s_.substr(start, pos_ - start);
    }

    // After "key=", everything up to the next list-level ',' or ')'.
    std::string value() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && s_[pos_] != ',' && s_[pos_] != ')') ++pos_;
        if (start == pos_) err("expected a value");
        return s_.substr(start, pos_ - start);
    }

    // Params continue over a ',' only when it is followed by "ident=".
    bool more_params() {
        if (pos_ >= s_.size() || s_[pos_] != ',') return false;
        std::size_t look = pos_ + 1;
        while (look < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[look])) || s_[look] == '_'))
            ++look;
        if (look == pos_ + 1 || look >= s_.size() || s_[look] != '=') return false;
        ++pos_;
        return true;
    }

    std::map<std::string, std::string> params() {
        std::map<std::string, std::string> kv;
        if (!eat(':')) err("expected ':' before parameters");
        do {
            const std::string key = ident();
            if (!eat('=')) err("expected '=' after '" + key + "'");
            kv[key] = value();
        } while (more_params());
        return kv;
    }

    long long int_param(const std::map<std::string, std::string>& kv, const std::string& key) {
        auto it = kv.find(key);
        if (it == kv.end()) err("missing parameter '" + key + "'");
        try {
            std::size_t used = 0;
            long long v = std::stoll(it->second, &used);
            if (used != it->second.size()) throw std::invalid_argument("");
            return v;
        } catch (const std::exception&) {
            err("parameter '" + key + "' is not an integer");
        }
    }

    ManifoldModel recipe() {
        const std::string name = ident();
        if (name == "product") {
            if (!eat('(')) err("expected '(' after product");
            ManifoldModel a = recipe();
            if (!eat(',')) err("expected ',' between product factors");
            ManifoldModel b = recipe();
            if (!eat(')')) err("expected ')' after product factors");
            return build_product(a, b);
        }
        if (name == "cp1") {
            auto kv = params();
            TheoryKind theory = TheoryKind::KTheory;
            if (auto it = kv.find("theory"); it != kv.end()) theory = theory_from_name(it->second);
            return build_cp1(int_param(kv, "k"), theory);
        }
        if (name == "cpn") {
            auto kv = params();
            return build_cpn(int_param(kv, "n"), int_param(kv, "k"));
        }
        if (name == "custom") {
            auto kv = params();
            auto it = kv.find("path");
            if (it == kv.end()) err("custom needs path=FILE");
            return read_model_file(it->second);
        }
        err("unknown recipe '" + name + "'");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

ManifoldModel build_from_recipe(const std::string& recipe) {
    return RecipeParser(recipe).parse();
}

}  // namespace resloc
