#pragma once

#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sofic/core/text.hpp"
#include "sofic/finsemi/row_monomial.hpp"

namespace sofic {

  //! A p x p block row-monomial matrix whose blocks are b x b row-monomial
  //! matrices over H, stored flat as a (p b) x (p b) row-monomial matrix:
  //! block i, inner row r is flat row i b + r.
  struct BlockShape {
    std::size_t p;
    std::size_t b;

    [[nodiscard]] std::size_t dim() const {
      return p * b;
    }

    //! Block column used by block row i; nullopt if the block row is zero.
    //! Throws CheckFailed if the block row uses several block columns.
    [[nodiscard]] std::optional<std::size_t> block_column(RowMonomialMatrix const& m, std::size_t i) const {
      std::optional<std::size_t> out;
      for (std::size_t r = 0; r < b; ++r) {
        if (!m.row_is_zero(i * b + r)) {
          std::size_t c = m.col(i * b + r) / b;
          if (out && *out != c) {
            detail::fail(ErrorCode::check_failed, "block row " + std::to_string(i)
                                                      + " is not block row-monomial");
          }
          out = c;
        }
      }
      return out;
    }

    //! The block entry of block row i (a b x b matrix), nullopt if zero.
    [[nodiscard]] std::optional<RowMonomialMatrix> block_entry(RowMonomialMatrix const& m, std::size_t i) const {
      auto c = block_column(m, i);
      if (!c) {
        return std::nullopt;
      }
      RowMonomialMatrix u(b);
      for (std::size_t r = 0; r < b; ++r) {
        if (!m.row_is_zero(i * b + r)) {
          u.set(r, static_cast<std::uint32_t>(m.col(i * b + r) - *c * b), m.val(i * b + r));
        }
      }
      return u;
    }

    //! Places u as the block (i, j) of m.
    void set_block(RowMonomialMatrix& m, std::size_t i, std::size_t j, RowMonomialMatrix const& u) const {
      for (std::size_t r = 0; r < b; ++r) {
        if (u.row_is_zero(r)) {
          m.clear_row(i * b + r);
        } else {
          m.set(i * b + r, static_cast<std::uint32_t>(j * b + u.col(r)), u.val(r));
        }
      }
    }

    //! Renames block indices i -> (i - shift) mod p in rows and columns.
    [[nodiscard]] RowMonomialMatrix rotate(RowMonomialMatrix const& m, std::size_t shift) const {
      RowMonomialMatrix out(dim());
      for (std::size_t i = 0; i < p; ++i) {
        if (auto c = block_column(m, i)) {
          set_block(out, (i + p - shift) % p, (*c + p - shift) % p, *block_entry(m, i));
        }
      }
      return out;
    }
  };

  //! Textual form: a header `blockmatrix p b`, then for each non-zero
  //! block a line `block r c` followed by b rows, each `-` or `<col> <h>`.
  inline std::string write_block_matrix(RowMonomialMatrix const& m, BlockShape const& shape, Group const& h) {
    std::string out = "blockmatrix " + std::to_string(shape.p) + " " + std::to_string(shape.b) + "\n";
    for (std::size_t i = 0; i < shape.p; ++i) {
      auto c = shape.block_column(m, i);
      if (!c) {
        continue;
      }
      out += "block " + std::to_string(i) + " " + std::to_string(*c) + "\n";
      auto u = *shape.block_entry(m, i);
      for (std::size_t r = 0; r < shape.b; ++r) {
        out += u.row_is_zero(r) ? std::string("-") : std::to_string(u.col(r)) + " " + h.name(u.val(r));
        out += '\n';
      }
    }
    return out;
  }

  inline RowMonomialMatrix read_block_matrix(std::string const& text, Group const& h, BlockShape* shape_out = nullptr) {
    std::istringstream in(text);
    auto               lines = detail::content_lines(in);
    if (lines.empty()) {
      detail::fail(ErrorCode::parse_error, "empty block matrix");
    }
    auto head = detail::tokens(lines[0].second);
    if (head.size() != 3 || head[0] != "blockmatrix") {
      detail::parse_fail(lines[0].first, "expected 'blockmatrix p b'");
    }
    BlockShape        shape{detail::parse_index(head[1], lines[0].first),
                     detail::parse_index(head[2], lines[0].first)};
    RowMonomialMatrix m(shape.dim());
    auto              element = [&](std::string const& name, std::size_t line) {
      for (Element x = 0; x < h.size(); ++x) {
        if (h.name(x) == name) {
          return x;
        }
      }
      detail::parse_fail(line, "unknown group element '" + name + "'");
    };
    std::size_t i = 1;
    while (i < lines.size()) {
      auto t = detail::tokens(lines[i].second);
      if (t.size() != 3 || t[0] != "block") {
        detail::parse_fail(lines[i].first, "expected 'block r c'");
      }
      std::size_t r = detail::parse_index(t[1], lines[i].first);
      std::size_t c = detail::parse_index(t[2], lines[i].first);
      if (r >= shape.p || c >= shape.p || i + shape.b >= lines.size()) {
        detail::parse_fail(lines[i].first, "block out of range or truncated");
      }
      RowMonomialMatrix u(shape.b);
      for (std::size_t k = 0; k < shape.b; ++k) {
        auto const& [number, row] = lines[i + 1 + k];
        auto        rt            = detail::tokens(row);
        if (rt.size() == 1 && rt[0] == "-") {
          continue;
        }
        if (rt.size() != 2) {
          detail::parse_fail(number, "expected '-' or '<col> <element>'");
        }
        auto col = detail::parse_index(rt[0], number);
        if (col >= shape.b) {
          detail::parse_fail(number, "column out of range");
        }
        u.set(k, static_cast<std::uint32_t>(col), element(rt[1], number));
      }
      shape.set_block(m, r, c, u);
      i += 1 + shape.b;
    }
    if (shape_out != nullptr) {
      *shape_out = shape;
    }
    return m;
  }

}  // namespace sofic
