#ifndef PSG_ERROR_HPP_
#define PSG_ERROR_HPP_

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace psg {

  //! Base class of every exception thrown by the library.
  class error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! A Cayley table fails associativity at the recorded triple.
  class non_associative : public error {
   public:
    non_associative(std::size_t x, std::size_t y, std::size_t z);

    std::array<std::size_t, 3> triple() const noexcept {
      return _triple;
    }

   private:
    std::array<std::size_t, 3> _triple;
  };

  class index_out_of_range : public error {
   public:
    using error::error;
  };

  //! A labelling is not compatible with multiplication: x1 ~ y1 and
  //! x2 ~ y2 but x1 x2 and y1 y2 lie in different blocks.
  class not_compatible : public error {
   public:
    not_compatible(std::size_t x1, std::size_t y1, std::size_t x2,
                   std::size_t y2);

    std::array<std::size_t, 4> quadruple() const noexcept {
      return _quadruple;
    }

   private:
    std::array<std::size_t, 4> _quadruple;
  };

  class ambient_mismatch : public error {
   public:
    using error::error;
  };

  class order_cap_exceeded : public error {
   public:
    using error::error;
  };

  class order_unsupported : public error {
   public:
    using error::error;
  };

  class precondition_violated : public error {
   public:
    using error::error;
  };

  class non_member_input : public error {
   public:
    using error::error;
  };

  //! Raised when a computation contradicts a proven statement that the
  //! library checks at runtime.  Never expected to fire.
  class theorem_violation : public error {
   public:
    using error::error;
  };

}  // namespace psg

#endif  // PSG_ERROR_HPP_
