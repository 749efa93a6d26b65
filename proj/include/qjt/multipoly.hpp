#ifndef QJT_MULTIPOLY_HPP
#define QJT_MULTIPOLY_HPP

#include "qjt/scalar.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qjt {

/*
 * Sparse multivariate polynomials over Q. Variables are an ordered list
 * of names shared by every polynomial in a computation; exponent vectors
 * are dense and aligned to that list. No stored term has a zero
 * coefficient.
 */
class MultiPoly {
public:
    using Exponents = std::vector<int>;

    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars);

    static MultiPoly constant(std::vector<std::string> vars, mpq_class c);
    static MultiPoly variable(std::vector<std::string> vars,
                              const std::string& name, int power = 1);

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<Exponents, mpq_class>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    int total_degree() const;  // -1 for the zero polynomial
    int degree_in(std::size_t var_index) const;

    void add_term(const Exponents& e, const mpq_class& c);

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly scaled(const mpq_class& c) const;
    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    // Exact division; nullopt when g does not divide *this.
    std::optional<MultiPoly> divide_exact(const MultiPoly& g) const;

    // Exact evaluation; every variable must be assigned, and all values
    // must share one field.
    Scalar eval(const std::map<std::string, Scalar>& point) const;

    std::string str() const;

private:
    std::vector<std::string> vars_;
    std::map<Exponents, mpq_class> terms_;

    void check_vars(const MultiPoly& o) const;
};

}  // namespace qjt

#endif
