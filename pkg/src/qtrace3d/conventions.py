"""Orientation conventions of the state-sum engine.

These constants pin down the handful of binary choices left open by the
skein relations (which are stated relative to a picture, not to our
combinatorial encoding).  They are fixed once and for all by calibrating
identities exercised in the test suite: the contractible-loop value, the
meridian trace of the built-in figure-eight example, and agreement of the
q = 1 specialization with the classical matrix oracle.

* ``TWIST_UP_IS_CCW`` - whether the height-raising twist relation moves an
  arc endpoint one puncture step counterclockwise (as seen from the
  lantern) or clockwise.
* ``BAD_CORNER`` - the (ccw-before, ccw-after) state pair whose corner-arc
  value vanishes; the other mixed pair has value 1.
* ``ALPHA_ENTRY_FIRST`` - whether the entry endpoint of a trivial
  returning arc is the first one met along the positive boundary
  orientation of its edge.
"""

TWIST_UP_IS_CCW = True
BAD_CORNER = (+1, -1)
ALPHA_ENTRY_FIRST = True
