"""Showcase *Neutrosophic - Soft* min-max-max decision making."""

from colour.utilities import message_box

import neutrosophic_soft

message_box(
    "Loading the car dealer fixture, two partners describe three cars with "
    'two parameters, "e_1" being costly and "e_2" being fuel efficient.'
)
matrices = neutrosophic_soft.load("Car Dealer")
print(matrices["A"])
print(matrices["B"])

message_box("Computing the And-product of both matrices.")
print(neutrosophic_soft.and_product(matrices["A"], matrices["B"]))

message_box("Deciding with the And-product.")
outcome = neutrosophic_soft.nsm_decide(matrices["A"], matrices["B"])
for object_score in outcome.per_object:
    print(object_score.object, object_score.d, round(object_score.s, 4))
print("Optimum:", [object_score.object for object_score in outcome.optimum])

message_box("Deciding with the Or-product and the algebraic norms.")
outcome = neutrosophic_soft.nsm_decide(
    matrices["A"], matrices["B"], "or", "algebraic"
)
for object_score in outcome.per_object:
    print(object_score.object, object_score.d, round(object_score.s, 4))
print("Optimum:", [object_score.object for object_score in outcome.optimum])
