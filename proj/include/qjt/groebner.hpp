#ifndef QJT_GROEBNER_HPP
#define QJT_GROEBNER_HPP

#include "qjt/multipoly.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace qjt {

/*
 * Buchberger's algorithm over Q, reduced output. Intended for small
 * instances (certification backend); a configurable S-pair budget guards
 * against blow-up and throws BudgetExceededError carrying the partial
 * basis when hit.
 */

enum class MonomialOrder { Degrevlex, Lex };

// true when a > b in the given order.
bool monomial_greater(const MultiPoly::Exponents& a,
                      const MultiPoly::Exponents& b, MonomialOrder order);

struct BuchbergerBudget {
    std::size_t max_pairs = 20000;
};

class BudgetExceededError : public std::runtime_error {
public:
    BudgetExceededError(std::string what, std::vector<MultiPoly> partial)
        : std::runtime_error(std::move(what)), partial_basis(std::move(partial)) {}
    std::vector<MultiPoly> partial_basis;
};

// Leading term of f in the order; f must be nonzero.
std::pair<MultiPoly::Exponents, mpq_class> leading_term(const MultiPoly& f,
                                                        MonomialOrder order);

// Full reduction of f modulo the basis.
MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& basis,
                      MonomialOrder order);

// Reduced Groebner basis of the ideal generated by gens. All generators
// must share one variable list. The reduced basis of the unit ideal is {1}.
std::vector<MultiPoly> buchberger(const std::vector<MultiPoly>& gens,
                                  MonomialOrder order,
                                  const BuchbergerBudget& budget = {});

bool is_unit_ideal_basis(const std::vector<MultiPoly>& reduced_basis);

}  // namespace qjt

#endif
