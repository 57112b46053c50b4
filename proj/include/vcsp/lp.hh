/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef VCSP_LP_HH
#define VCSP_LP_HH 1

#include <vcsp/extrat.hh>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace vcsp
{
    struct VarId
    {
        std::size_t index;

        friend auto operator== (const VarId &, const VarId &) -> bool = default;
    };

    enum class Relation
    {
        LessEqual,
        Equal,
        GreaterEqual
    };

    struct Term
    {
        VarId var;
        Rational coefficient;
    };

    struct Constraint
    {
        std::vector<Term> terms;
        Relation relation;
        Rational rhs;
        std::string name;
    };

    // A minimisation problem over nonnegative or free variables.
    class LinProgram
    {
        private:
            std::vector<std::string> _names;
            std::vector<bool> _free;
            std::vector<Rational> _objective;
            std::vector<Constraint> _constraints;

        public:
            auto add_variable(std::string name, bool free = false) -> VarId;
            auto set_objective(VarId var, const Rational & coefficient) -> void;
            auto add_constraint(std::vector<Term> terms, Relation relation, const Rational & rhs,
                    std::string name = "") -> std::size_t;

            auto variable_count() const -> std::size_t
            {
                return _names.size();
            }

            auto variable_name(VarId var) const -> const std::string &
            {
                return _names[var.index];
            }

            auto is_free(VarId var) const -> bool
            {
                return _free[var.index];
            }

            auto objective(VarId var) const -> const Rational &
            {
                return _objective[var.index];
            }

            auto constraints() const -> const std::vector<Constraint> &
            {
                return _constraints;
            }

            // CPLEX-LP style text, for inspection.
            auto to_lp_text() const -> std::string;
    };

    enum class LpStatus
    {
        Optimal,
        Infeasible,
        Unbounded
    };

    struct LpOutcome
    {
        LpStatus status;
        Rational value;
        std::vector<Rational> values;
        // One dual price per constraint, for the problem as stated: at an
        // optimum, objective minus the dual-weighted constraint rows is
        // nonnegative on nonnegative variables and zero on free ones.
        std::vector<Rational> duals;
        std::uint64_t pivots = 0;
    };

    struct SolveOptions
    {
        std::uint64_t max_pivots = 1'000'000;
    };

    auto solve(const LinProgram & lp, const SolveOptions & options = { }) -> LpOutcome;

    // Evaluates every constraint exactly; returns a description of the first
    // violated one, if any.
    auto check_assignment(const LinProgram & lp, const std::vector<Rational> & values) -> std::optional<std::string>;

    auto objective_value(const LinProgram & lp, const std::vector<Rational> & values) -> Rational;
}

#endif
