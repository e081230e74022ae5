"""
Report builders behind every command

Each builder takes a RunConfig (plus the command's own arguments) and
returns a report dict for output.render; the API routes call the same
builders, so both surfaces return identical bodies.
"""
from sympy import primerange

from wzslab.config import LENGTH_SWEEP_MAX_N, DIVISOR_CLOSED_CAP
from wzslab.errors import CapExceeded, HypothesisNotMet, NotInNPrime, PrimeDividesConductor
from wzslab.group_module import identity_weights, plus_minus
from wzslab.job_module import map_jobs
from wzslab.logger import logger
from wzslab.monoid_module import (
    MonoidHandle,
    catenary_degree,
    catenary_of_element,
    davenport_large,
    davenport_lower_bound_pm,
    davenport_small,
    davenport_star,
    delta_set_bounded,
    elasticity_at_bound,
    factorizations,
    omega,
    set_of_lengths,
    theorem62_prediction,
    unions_Uk,
)
from wzslab.output import make_report
from wzslab.parse_module import parse_group_spec, parse_sequence, parse_weight_spec
from wzslab.qform_module import (
    SweepRow,
    admissible_range,
    class_group,
    discriminant_info,
    in_Rcirc_via_full_theta,
    in_Rcirc_via_transfer,
    is_admissible,
    lengths_in_Rcirc,
    lengths_via_sequences,
    prime_data,
    prime_signature,
    represents_principal_bruteforce,
    sweep_row,
    theta_prime,
)
from wzslab.sequence_module import is_wzs
from wzslab.structure_module import (
    class_semigroup,
    cic_member,
    cic_seed,
    divisor_closed_submonoids,
    height_one_primes,
    is_seminormal,
    nonweakly_krull_witness,
    theorem44_verdict,
)

def load_group(config):
    G = parse_group_spec(config.group, cap=config.order_cap)
    return G, parse_weight_spec(G, config.weights)

def load_monoid(config):
    G, weights = load_group(config)
    return MonoidHandle(G, weights, order_cap=config.order_cap)

# Monoid commands

def cmd_atoms(config):
    H = load_monoid(config)
    atoms = H.atoms
    body = {
        "monoid": H.label(),
        "description": H.describe(),
        "atom_count": len(atoms),
        "davenport": davenport_large(H),
        "atoms": [a.serialize() for a in atoms],
    }
    return make_report("atoms", config.header(), body)

def _prediction(G, k, davenport, weights):
    if not weights.same_set(plus_minus(G)):
        return None
    try:
        return theorem62_prediction(G, k, davenport=davenport)
    except HypothesisNotMet:
        return None

def cmd_invariants(config):
    """D, d, Δ, c and ω at their bounds, then the U_k table against the closed form"""
    H = load_monoid(config)
    G = H.group
    bound = config.length_bound
    H.lattice(bound)
    D = davenport_large(H)
    pm = H.weights.same_set(plus_minus(G))
    plain_D = davenport_large(MonoidHandle(G, identity_weights(G), order_cap=config.order_cap))

    def row(k):
        union = unions_Uk(H, k, bound)
        predicted = _prediction(G, k, plain_D, H.weights)
        entry = union.as_dict()
        entry["predicted"] = [predicted.low, predicted.high] if predicted else None
        entry["matches"] = (list(predicted.values) == list(union.values)) if predicted and not union.bound_too_small else None
        return entry

    rows = map_jobs(row, range(2, config.k_max + 1), threads=config.threads, progress="U_k")
    body = {
        "monoid": H.label(),
        "davenport": D,
        "davenport_small": davenport_small(H),
        "davenport_star": davenport_star(G),
        "davenport_lower_bound_pm": davenport_lower_bound_pm(G) if pm else None,
        "delta_set": delta_set_bounded(H, bound).as_dict(),
        "catenary": catenary_degree(H, bound).as_dict(),
        "omega": omega(H, config.omega_cap).as_dict(),
        "elasticity_lower_bound": str(elasticity_at_bound(H, bound)),
        "unions": rows,
    }
    return make_report("invariants", config.header(), body)

def cmd_lengths(config, sequence):
    H = load_monoid(config)
    S = parse_sequence(H.group, sequence)
    member = H.contains(S)
    body = {
        "monoid": H.label(),
        "sequence": S.serialize(),
        "length": len(S),
        "member": member,
        "lengths": None,
        "factorization_count": None,
        "catenary": None,
    }
    if member:
        zs = factorizations(H, S)
        body["lengths"] = set_of_lengths(H, S).as_list()
        body["factorization_count"] = len(zs)
        body["catenary"] = catenary_of_element(H, S)
        body["atoms_used"] = sorted({H.atoms[j].serialize() for z in zs for j in z.atom_indices})
    return make_report("lengths", config.header(), body)

# Structure commands

def cmd_seminormal(config):
    G, weights = load_group(config)
    report = is_seminormal(G, weights, length_bound=config.search_bound)
    body = report.as_dict()
    try:
        seed = cic_seed(weights)
        body["complete_integral_closure"] = {
            "seed": seed.serialize(),
            "seed_is_member": is_wzs(seed, weights),
            "seed_in_closure": cic_member(seed, weights),
        }
    except HypothesisNotMet as e:
        body["complete_integral_closure"] = {"unavailable": str(e)}
    return make_report("seminormal", config.header(), body)

def cmd_class_semigroup(config):
    G, weights = load_group(config)
    cs = class_semigroup(G, weights)
    body = cs.as_dict()
    body["commutative"] = cs.is_commutative()
    body["associative"] = cs.is_associative()
    body["idempotents_are_subgroups"] = cs.idempotents_are_subgroups()
    body["constituents_elementary_two"] = all(cs.is_elementary_two(e) for e in cs.idempotents)
    return make_report("class-semigroup", config.header(), body)

def cmd_structure(config):
    H = load_monoid(config)
    G, weights = H.group, H.weights
    body = theorem44_verdict(G, weights).as_dict()
    case = body["witness_case"]
    if case:
        body["fraction_witness"] = nonweakly_krull_witness(G, weights, int(case.split()[-1])).as_dict()
    body["height_one_primes"] = [repr(p) for p in height_one_primes(H)]
    try:
        body["divisor_closed_submonoids"] = len(divisor_closed_submonoids(H, DIVISOR_CLOSED_CAP))
    except CapExceeded as e:
        logger.warning(str(e))
        body["divisor_closed_submonoids"] = None
    return make_report("structure", config.header(), body)

# Quadratic forms

def _qform_header(config, disc, **extra):
    header = config.header()
    header["discriminant"] = disc
    header.update(extra)
    return header

def cmd_qform_classgroup(config, disc):
    F = class_group(disc)
    primes = []
    for p in primerange(2, 50):
        try:
            primes.append(prime_data(disc, p).as_dict())
        except PrimeDividesConductor:
            continue
    body = {
        "info": discriminant_info(disc),
        "class_group": F.as_dict(),
        "primes": primes,
    }
    return make_report("qform classgroup", _qform_header(config, disc), body)

def cmd_qform_check(config, disc, n):
    admissible = is_admissible(disc, n)
    represented = represents_principal_bruteforce(disc, n)
    body = {
        "n": n,
        "prime_signature": prime_signature(n),
        "admissible": admissible,
        "bruteforce_verdict": represented,
        "verdict": "represented" if represented else "not represented",
        "transfer_verdict": None,
        "theta_prime": None,
        "full_theta_verdict": None,
        "lengths_monoid": None,
        "lengths_sequences": None,
    }
    if admissible:
        body["theta_prime"] = theta_prime(disc, n).serialize()
        body["transfer_verdict"] = in_Rcirc_via_transfer(disc, n)
        if body["transfer_verdict"]:
            body["lengths_monoid"] = lengths_in_Rcirc(disc, n).as_list()
            body["lengths_sequences"] = lengths_via_sequences(disc, n).as_list()
    try:
        body["full_theta_verdict"] = in_Rcirc_via_full_theta(disc, n)
    except NotInNPrime as e:
        logger.debug(str(e))
    return make_report("qform check", _qform_header(config, disc, n=n), body)

def qform_sweep_rows(disc, max_n, lengths_max_n=LENGTH_SWEEP_MAX_N, threads=None):
    """SweepRows for every admissible n ≤ max_n, in increasing n"""
    values = admissible_range(disc, max_n)
    return map_jobs(lambda n: sweep_row(disc, n, with_lengths=n <= lengths_max_n),
                    values, threads=threads, progress=f"sweep {disc}")

def cmd_qform_sweep(config, disc):
    rows = qform_sweep_rows(disc, config.sweep_max_n, threads=config.threads)
    disagreements = [r.n for r in rows if not r.agrees]
    body = {
        "discriminant": disc,
        "admissible_count": len(rows),
        "members": sum(1 for r in rows if r.transfer_verdict),
        "lengths_max_n": LENGTH_SWEEP_MAX_N,
        "disagreements": disagreements,
        "all_agree": not disagreements,
    }
    header = _qform_header(config, disc, lengths_max_n=LENGTH_SWEEP_MAX_N)
    return make_report("qform sweep", header, body,
                       rows=[r.as_dict() for r in rows], columns=SweepRow.COLUMNS)

def cmd_qform(subcommand, config, disc, n=None):
    if subcommand == "classgroup":
        return cmd_qform_classgroup(config, disc)
    if subcommand == "check":
        return cmd_qform_check(config, disc, n)
    if subcommand == "sweep":
        return cmd_qform_sweep(config, disc)
    raise HypothesisNotMet(f"unknown qform subcommand {subcommand!r}")
