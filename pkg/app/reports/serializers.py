# File: reports/serializers.py
"""
Plain JSON-ready trees (dicts, lists, ints, strings) for the library's
result objects. Tuples become lists and frozensets sorted lists, so a
rendered report parses back to exactly the same tree.

"""


def fan_summary(vfan):
    return {"name": vfan.name, "rank": vfan.rank, "rays": vfan.ray_count}


def facets(vfan):
    return [
        {"rays": sorted(facet), "cones": list(cones)} for facet, cones in vfan.facets
    ]


def class_group(data, degrees):
    return {
        "free_rank": data.free_rank,
        "torsion": list(data.torsion),
        "ray_classes": [degree.as_dict() for degree in degrees],
    }


def roots(found, counts):
    semisimple = sum(1 for root in found if root.semisimple)
    return {
        "count": len(found),
        "semisimple": semisimple,
        "non_semisimple": len(found) - semisimple,
        "per_ray": [
            {"ray": i, "semisimple": ss, "non_semisimple": other}
            for i, (ss, other) in enumerate(counts)
        ],
        "roots": [root.as_dict() for root in found],
    }


def classes(ray_classes, ordered):
    return {
        "classes": [list(members) for members in ray_classes.classes],
        "order": [[a, b] for a, b in sorted(ordered.order)],
        "depth": list(ordered.depth),
        "layers": [list(layer) for layer in ordered.layers],
    }


def reductive(description):
    return {
        "gl_factors": list(description.gl_factors),
        "torus": {
            "free_rank": description.torus_free_rank,
            "torsion": list(description.torus_torsion),
        },
        "dimension": description.dimension,
    }


def unipotent(description):
    return {
        "total_dimension": description.total_dimension,
        "layers": [
            {
                "index": layer.index,
                "classes": list(layer.classes),
                "dimension": layer.dimension,
            }
            for layer in description.layers
        ],
        "chain": [{"dimension": d, "normal": True} for d in description.chain],
        "ray_dimensions": list(description.ray_dimensions),
        "class_dimensions": list(description.class_dimensions),
    }


def representation(decomposition):
    return {
        "acting_class": decomposition.acting_class,
        "action": decomposition.action,
        "target_ray": decomposition.target_ray,
        "target_class": decomposition.target_class,
        "summands": [
            {"degree": degree, "multiplicity": multiplicity}
            for degree, multiplicity in decomposition.summands
        ],
    }


def radical(description):
    return {
        "semisimple_span_rank": description.semisimple_span_rank,
        "quotient": {
            "rank": description.quotient_rank,
            "torsion": list(description.quotient_torsion),
        },
        "cox_torus_rank": description.cox_torus_rank,
    }


def aut0(report):
    return {
        "formula": report.formula,
        "total_dimension": report.total_dimension,
        "lie_dimension": report.lie_dimension,
        "semisimple_roots": report.semisimple_count,
        "reductive": reductive(report.reductive),
        "unipotent": unipotent(report.unipotent),
        "representations": [representation(r) for r in report.representations],
        "radical": radical(report.radical),
    }


def symmetries(auts):
    return {"order": len(auts), "aut_delta": [g.as_dict() for g in auts]}


def component_group(report):
    return {
        "order": report.order,
        "aut_delta_order": len(report.aut_delta),
        "class_sizes": list(report.class_sizes),
        "weyl_image": [g.as_dict() for g in report.weyl_image],
        "cosets": [g.as_dict() for g in report.cosets],
        "class_compatible": True,
    }


def verification(suite):
    return {
        "passed": suite.passed,
        "box": suite.box,
        "checks": len(suite.checks),
        "by_kind": dict(sorted(suite.counts().items())),
    }
