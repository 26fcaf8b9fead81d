"""Serializers for Runs App."""

from collections.abc import Mapping
from functools import partial

from django.utils.translation import gettext_lazy as _
from rest_framework import serializers

from apps.bhz.microwaves import MIN_CARRIER_SCALE
from apps.dynamics.choices import IntegrationScheme
from apps.dynamics.choices import ReferenceMode
from apps.dynamics.protocols import MAX_LEAD_IN
from apps.dynamics.protocols import MIN_MEASUREMENTS
from apps.invariants.grids import MIN_DIVISIONS
from apps.utils.validators import StrictlyPositiveValidator
from apps.utils.validators import validate_finite
from apps.utils.validators import validate_nonzero

from .records import FramesSection
from .records import GridSection
from .records import ModelSection
from .records import ProtocolSection
from .records import RunConfig
from .records import SweepSection
from .records import TomographySection
from .records import resolve_output_path
from .records import simulation_default

OPTIONAL_SECTIONS = ("grid", "protocol", "sweep", "tomography", "frames")


def default(name):
    return partial(simulation_default, name)


def finite_float(**kwargs):
    validators = [validate_finite, *kwargs.pop("validators", [])]
    return serializers.FloatField(validators=validators, **kwargs)


def positive_float(**kwargs):
    return finite_float(validators=[StrictlyPositiveValidator()], **kwargs)


class StrictSerializer(serializers.Serializer):
    """Serializer that rejects keys it does not declare."""

    def to_internal_value(self, data):
        unknown = []
        if isinstance(data, Mapping):
            unknown = sorted(str(key) for key in data if key not in self.fields)
        errors = {}
        try:
            value = super().to_internal_value(data)
        except serializers.ValidationError as exc:
            errors = dict(exc.detail) if isinstance(exc.detail, Mapping) else {}
            if not errors:
                raise
        for key in unknown:
            errors[key] = [serializers.ErrorDetail(_("Unknown key."), code="unknown")]
        if errors:
            raise serializers.ValidationError(errors)
        return value


class ModelSectionSerializer(StrictSerializer):
    """Serializer for the BHZ parameters."""

    A = positive_float(default=default("A"))
    B = finite_float(validators=[validate_nonzero])
    M = finite_float()
    g = finite_float(min_value=0.0, default=default("g"))


class GridSectionSerializer(StrictSerializer):
    R = serializers.IntegerField(min_value=MIN_DIVISIONS, default=default("grid_size"))
    N = serializers.IntegerField(min_value=MIN_DIVISIONS, default=default("grid_size"))


class ProtocolSectionSerializer(StrictSerializer):
    """Serializer for the kx ramp shared by every ky line."""

    omega_t_over_pi = positive_float(default=default("omega_t_over_pi"))
    steps = serializers.IntegerField(min_value=1, default=default("steps"))
    meas_count = serializers.IntegerField(
        min_value=MIN_MEASUREMENTS, default=default("meas_count")
    )
    ky_lines = serializers.IntegerField(min_value=2, default=default("ky_lines"))
    smoothing_window = serializers.IntegerField(
        min_value=1, default=default("smoothing_window")
    )
    scheme = serializers.ChoiceField(
        choices=IntegrationScheme.choices, default=default("scheme")
    )
    lead_in = finite_float(
        min_value=0.0, max_value=MAX_LEAD_IN, default=default("lead_in")
    )

    def validate(self, attrs):
        if attrs["steps"] % attrs["meas_count"]:
            raise serializers.ValidationError(
                {"steps": _("Must be a multiple of meas_count.")}, code="not_multiple"
            )
        return attrs


class SweepSectionSerializer(StrictSerializer):
    """Serializer for the sweep axes; an empty list keeps the base value."""

    m_over_2b_values = serializers.ListField(child=finite_float(), default=list)
    g_over_a_values = serializers.ListField(
        child=finite_float(min_value=0.0), default=list
    )
    omega_t_over_pi_values = serializers.ListField(child=positive_float(), default=list)


class TomographySectionSerializer(StrictSerializer):
    ky = finite_float(default=default("tomography_ky"))


class FramesSectionSerializer(StrictSerializer):
    """Serializer for the lab against rotating frame check."""

    kx = finite_float(default=default("frames_kx"))
    ky = finite_float(default=default("frames_ky"))
    synthetic_carrier_scale = finite_float(
        min_value=MIN_CARRIER_SCALE, default=default("synthetic_carrier_scale")
    )
    duration = positive_float(default=default("frames_duration"))
    samples = serializers.IntegerField(min_value=1, default=default("frames_samples"))
    closure_offset = finite_float(default=0.0)


class RunConfigSerializer(StrictSerializer):
    """Serializer for a whole run configuration file."""

    model = ModelSectionSerializer()
    grid = GridSectionSerializer()
    protocol = ProtocolSectionSerializer()
    reference_mode = serializers.ChoiceField(
        choices=ReferenceMode.choices, default=default("reference_mode")
    )
    gap_floor = positive_float(default=default("gap_floor"))
    sweep = SweepSectionSerializer()
    tomography = TomographySectionSerializer()
    frames = FramesSectionSerializer()
    output_path = serializers.CharField()
    workers = serializers.IntegerField(min_value=1, default=default("workers"))
    seed = serializers.IntegerField(required=False, allow_null=True, default=None)

    def to_internal_value(self, data):
        if isinstance(data, Mapping):
            # Missing sections still get their documented defaults.
            data = {**{name: {} for name in OPTIONAL_SECTIONS}, **data}
        return super().to_internal_value(data)

    def create(self, validated_data):
        sweep = validated_data["sweep"]
        return RunConfig(
            model=ModelSection(**validated_data["model"]),
            grid=GridSection(**validated_data["grid"]),
            protocol=ProtocolSection(**validated_data["protocol"]),
            reference_mode=validated_data["reference_mode"],
            gap_floor=validated_data["gap_floor"],
            sweep=SweepSection(**{key: tuple(values) for key, values in sweep.items()}),
            tomography=TomographySection(**validated_data["tomography"]),
            frames=FramesSection(**validated_data["frames"]),
            output_path=resolve_output_path(validated_data["output_path"]),
            workers=validated_data["workers"],
            seed=validated_data["seed"],
        )


def flatten_errors(detail, prefix=""):
    """(dotted key path, message, code) for every leaf of a DRF error tree."""
    if isinstance(detail, Mapping):
        for key, value in detail.items():
            path = f"{prefix}.{key}" if prefix else str(key)
            if key == "non_field_errors":
                path = prefix or "(document)"
            yield from flatten_errors(value, path)
    elif isinstance(detail, list):
        for item in detail:
            yield from flatten_errors(item, prefix)
    else:
        yield prefix, str(detail), getattr(detail, "code", None)
