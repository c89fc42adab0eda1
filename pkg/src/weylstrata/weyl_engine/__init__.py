"""Root systems, Weyl group elements, parabolic subgroups and the class registry."""
