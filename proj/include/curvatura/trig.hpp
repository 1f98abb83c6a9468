#pragma once

#include <array>

#include "curvatura/core.hpp"

namespace curvatura {

// A labelled triangle: side x opposite angle X.  Instances produced by the
// solvers always satisfy the law of cosines and the angle-sum trichotomy of
// their space; validate() re-derives both.
struct Triangle {
    SpaceForm space;
    double a = 0, b = 0, c = 0;  // side lengths
    double A = 0, B = 0, C = 0;  // angles (radians)

    double angle_sum() const { return A + B + C; }
    // pi - angle sum; negative excess on the sphere.
    double defect() const;
    void validate(double tol = 1e-9) const;
};

struct AngleTriple {
    double A, B, C;
};

// Law of cosines, solved for the side: given sides b, c and the included
// angle A, the opposite side a.  Reduced lengths (x/R) keep the spherical
// and hyperbolic branches mirror images.
double side_from_sas(const SpaceForm& s, double b, double c, double A);

// Law of cosines solved for the angles of an SSS triangle.
AngleTriple angles_from_sss(const SpaceForm& s, double a, double b, double c);

Triangle triangle_from_sss(const SpaceForm& s, double a, double b, double c);
Triangle triangle_from_sas(const SpaceForm& s, double b, double c, double A);

// R^2 * excess on the sphere, R^2 * defect on the hyperbolic plane.
// Euclidean input is rejected: angles do not determine a Euclidean area.
double area_from_angles(const SpaceForm& s, double A, double B, double C);

// Side of the unique equilateral triangle with the given vertex angle; this
// is the absolute length unit carried by the non-Euclidean planes.  Primary
// path is bracketing bisection on the monotone angle-of-equilateral map.
// Hyperbolic domain: alpha in (0, pi/3); spherical: (pi/3, pi).
double equilateral_side_for_angle(const SpaceForm& s, double alpha);

// Closed-form cross-check for the bisection (tests only use it against the
// primary path).
double equilateral_side_closed_form(const SpaceForm& s, double alpha);

// Vertex angle of the equilateral triangle of side s (monotone map that the
// bisection above inverts).
double equilateral_angle_for_side(const SpaceForm& s, double side);

// Median/circumcenter split of an equilateral triangle of side s:
// F is the midpoint of BC, D the common point of the perpendicular bisectors
// of the sides; returns (AF, DF).  D is verified equidistant from A, B, C.
struct MedianSplit {
    double AF, DF;
};
MedianSplit equilateral_median_split(const SpaceForm& s, double side);

}  // namespace curvatura
