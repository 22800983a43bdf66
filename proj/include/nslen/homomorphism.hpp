#ifndef NSLEN_HOMOMORPHISM_HPP
#define NSLEN_HOMOMORPHISM_HPP

#include <functional>
#include <memory>
#include <vector>

#include "nslen/limits.hpp"
#include "nslen/perm_group.hpp"

namespace nslen {

/// An action-induced homomorphism from `source` onto a permutation group
/// `image` on its own point set, with its kernel and a lifting map.
class GroupHom {
public:
  using Map = std::function<Permutation(const Permutation &)>;

  /// Homomorphism given by the images of the source generators and a map
  /// computing the image of an arbitrary source element. The kernel and
  /// lifting are derived from a stabilizer chain of the graph of the action.
  static GroupHom from_action(PermGroup source, std::size_t image_degree, Map project);

  /// Homomorphism with a known kernel and lifting map.
  static GroupHom with_kernel(PermGroup source, PermGroup image, PermGroup kernel,
                              Map project, Map lift);

  /// Identity map of a group onto itself.
  static GroupHom identity(const PermGroup &group);

  const PermGroup &source() const noexcept;
  const PermGroup &image() const noexcept;
  const PermGroup &kernel() const;

  Permutation project(const Permutation &x) const;

  /// Some preimage of y; throws NotInGroup if y is not in the image.
  Permutation lift(const Permutation &y) const;

  /// Image of a subgroup of the source.
  PermGroup image_of(const PermGroup &subgroup) const;

  /// Full preimage of a subgroup of the image: <kernel, lifts of its generators>.
  PermGroup preimage(const PermGroup &subgroup) const;

private:
  struct Impl;
  explicit GroupHom(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<Impl> impl_;
};

/// Action of G on the right cosets of H. Coset points are numbered in BFS
/// discovery order over G's generators, starting from H itself as point 0.
/// Throws NotSubgroup, or TierExceeded when |G:H| exceeds the quotient cap.
GroupHom coset_action(const PermGroup &g, const PermGroup &h,
                      const Limits &limits = default_limits());

/// Faithful permutation representation of G/N. Throws NotNormal or
/// TierExceeded. The kernel of the returned map is exactly N.
GroupHom quotient_group(const PermGroup &g, const PermGroup &n,
                        const Limits &limits = default_limits());

/// Action of G by conjugation on a list of subgroups it permutes; the image
/// acts on the indices {0..t-1}. Throws NotPermuted if some conjugate of a
/// listed subgroup is not in the list.
GroupHom kernel_of_action_on_factors(const PermGroup &g, const std::vector<PermGroup> &factors,
                                     const Limits &limits = default_limits());

/// Whether N is normalized by every generator of G (N must lie in G).
bool is_normal_subgroup(const PermGroup &g, const PermGroup &n);

} // namespace nslen

#endif // NSLEN_HOMOMORPHISM_HPP
