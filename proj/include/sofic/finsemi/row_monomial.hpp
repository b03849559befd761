#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "sofic/finsemi/group.hpp"
#include "sofic/finsemi/partial_transformation.hpp"

namespace sofic {

  //! Square matrix over G^0 with at most one non-zero entry per row.
  //! Row i holds (column, value) or nothing.
  class RowMonomialMatrix {
   public:
    static constexpr std::uint32_t none = std::numeric_limits<std::uint32_t>::max();

    RowMonomialMatrix() = default;

    explicit RowMonomialMatrix(std::size_t dim) : _col(dim, none), _val(dim, 0) {}

    RowMonomialMatrix(std::vector<std::uint32_t> cols, std::vector<Element> vals)
        : _col(std::move(cols)), _val(std::move(vals)) {
      if (_col.size() != _val.size()) {
        detail::fail(ErrorCode::dimension_mismatch, "row-monomial column/value sizes");
      }
      for (std::size_t i = 0; i < _col.size(); ++i) {
        if (_col[i] == none) {
          _val[i] = 0;
        } else if (_col[i] >= _col.size()) {
          detail::fail(ErrorCode::invalid_argument, "row-monomial column out of range");
        }
      }
    }

    static RowMonomialMatrix identity(std::size_t dim, Element one) {
      RowMonomialMatrix m(dim);
      for (std::size_t i = 0; i < dim; ++i) {
        m.set(i, static_cast<std::uint32_t>(i), one);
      }
      return m;
    }

    //! Decorates a partial transformation with a constant group value.
    static RowMonomialMatrix from_transformation(PartialTransformation const& t, Element value) {
      RowMonomialMatrix m(t.degree());
      for (std::size_t i = 0; i < t.degree(); ++i) {
        if (t.defined_at(i)) {
          m.set(i, t[i], value);
        }
      }
      return m;
    }

    [[nodiscard]] std::size_t dim() const noexcept {
      return _col.size();
    }

    [[nodiscard]] bool row_is_zero(std::size_t i) const {
      return _col[i] == none;
    }

    [[nodiscard]] std::uint32_t col(std::size_t i) const {
      return _col[i];
    }

    [[nodiscard]] Element val(std::size_t i) const {
      return _val[i];
    }

    //! Entry (i, j), or nullopt for zero.
    [[nodiscard]] std::optional<Element> at(std::size_t i, std::size_t j) const {
      if (_col[i] == j) {
        return _val[i];
      }
      return std::nullopt;
    }

    void set(std::size_t i, std::uint32_t j, Element g) {
      _col[i] = j;
      _val[i] = j == none ? 0 : g;
    }

    void clear_row(std::size_t i) {
      _col[i] = none;
      _val[i] = 0;
    }

    [[nodiscard]] bool is_zero() const {
      for (auto c : _col) {
        if (c != none) {
          return false;
        }
      }
      return true;
    }

    //! Wreath-product projection onto the underlying partial transformation.
    [[nodiscard]] PartialTransformation projection() const {
      std::vector<std::uint32_t> im(_col.size(), PartialTransformation::undefined);
      for (std::size_t i = 0; i < _col.size(); ++i) {
        if (_col[i] != none) {
          im[i] = _col[i];
        }
      }
      return PartialTransformation(std::move(im));
    }

    [[nodiscard]] std::vector<std::uint32_t> const& cols() const noexcept {
      return _col;
    }

    [[nodiscard]] std::vector<Element> const& vals() const noexcept {
      return _val;
    }

    bool operator==(RowMonomialMatrix const&) const = default;

   private:
    std::vector<std::uint32_t> _col;
    std::vector<Element>       _val;
  };

  [[nodiscard]] inline RowMonomialMatrix multiply(RowMonomialMatrix const& a,
                                                  RowMonomialMatrix const& b,
                                                  Group const&             g) {
    if (a.dim() != b.dim()) {
      detail::fail(ErrorCode::dimension_mismatch, "row-monomial dimensions differ");
    }
    RowMonomialMatrix out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
      auto j = a.col(i);
      if (j != RowMonomialMatrix::none && b.col(j) != RowMonomialMatrix::none) {
        out.set(i, b.col(j), g(a.val(i), b.val(j)));
      }
    }
    return out;
  }

  //! Applies a map on group elements entrywise (functoriality of RM_B).
  template <typename F>
  [[nodiscard]] RowMonomialMatrix map_entries(RowMonomialMatrix const& a, F&& f) {
    RowMonomialMatrix out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (!a.row_is_zero(i)) {
        out.set(i, a.col(i), f(a.val(i)));
      }
    }
    return out;
  }

  //! Multiplication functor for use with enumerate_semigroup.
  struct RowMonomialProduct {
    Group const* group;

    RowMonomialMatrix operator()(RowMonomialMatrix const& a, RowMonomialMatrix const& b) const {
      return multiply(a, b, *group);
    }
  };

  inline std::string to_string(RowMonomialMatrix const& m, Group const& g) {
    std::string out;
    for (std::size_t i = 0; i < m.dim(); ++i) {
      if (i > 0) {
        out += ' ';
      }
      if (m.row_is_zero(i)) {
        out += '-';
      } else {
        out += std::to_string(m.col(i)) + ':' + g.name(m.val(i));
      }
    }
    return out;
  }

}  // namespace sofic

template <>
struct std::hash<sofic::RowMonomialMatrix> {
  std::size_t operator()(sofic::RowMonomialMatrix const& m) const {
    return sofic::detail::hash_range(m.vals(), sofic::detail::hash_range(m.cols()));
  }
};
