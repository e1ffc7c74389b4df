# Copyright (c) 2026, DjaoDjin inc.
# All rights reserved.
#
# Redistribution and use in source and binary forms, with or without
# modification, are permitted provided that the following conditions are met:
#
# 1. Redistributions of source code must retain the above copyright notice,
#    this list of conditions and the following disclaimer.
# 2. Redistributions in binary form must reproduce the above copyright
#    notice, this list of conditions and the following disclaimer in the
#    documentation and/or other materials provided with the distribution.
#
# THIS SOFTWARE IS PROVIDED BY THE COPYRIGHT HOLDERS AND CONTRIBUTORS
# "AS IS" AND ANY EXPRESS OR IMPLIED WARRANTIES, INCLUDING, BUT NOT LIMITED
# TO, THE IMPLIED WARRANTIES OF MERCHANTABILITY AND FITNESS FOR A PARTICULAR
# PURPOSE ARE DISCLAIMED. IN NO EVENT SHALL THE COPYRIGHT HOLDER OR
# CONTRIBUTORS BE LIABLE FOR ANY DIRECT, INDIRECT, INCIDENTAL, SPECIAL,
# EXEMPLARY, OR CONSEQUENTIAL DAMAGES (INCLUDING, BUT NOT LIMITED TO,
# PROCUREMENT OF SUBSTITUTE GOODS OR SERVICES; LOSS OF USE, DATA, OR PROFITS;
# OR BUSINESS INTERRUPTION) HOWEVER CAUSED AND ON ANY THEORY OF LIABILITY,
# WHETHER IN CONTRACT, STRICT LIABILITY, OR TORT (INCLUDING NEGLIGENCE OR
# OTHERWISE) ARISING IN ANY WAY OUT OF THE USE OF THIS SOFTWARE, EVEN IF
# ADVISED OF THE POSSIBILITY OF SUCH DAMAGE.

"""
Validation of scenario files.

A scenario file is turned into a ``ScenarioForm`` whose fields are the
dotted scenario keys. Keys absent from the file take the value of the
reference scenario, with ``kernel`` and ``ac_sigma`` taken from
the ``STARFAS`` settings.
"""
import logging
from collections import OrderedDict
from dataclasses import dataclass

from django import forms
from django.core.exceptions import ValidationError
from django.core.validators import (BaseValidator, MaxValueValidator,
    MinValueValidator, validate_slug)
from django.utils.translation import gettext_lazy as _

from . import settings
from .analysis import gain_thresholds
from .campaigns import ANALYTIC_OUTPUTS, SWEEP_VARIABLES, OUTPUTS, SweepSpec
from .models import (FasGrid, PhaseError, ScenarioConfig, UserThresholds,
    PHASE_IDEAL, PHASE_VON_MISES, USERS)
from .utils import parse_scenario_text, read_scenario_file, scenario_as_items


LOGGER = logging.getLogger(__name__)

LEVEL_ERROR = 'error'
LEVEL_WARNING = 'warning'

VIOLATION_MESSAGES = {
    'common': "common-message constraint violated",
    'private': "private-message constraint violated",
}


class GreaterThanValidator(BaseValidator):
    message = _("Ensure this value is greater than %(limit_value)s.")
    code = 'min_value'

    def compare(self, a, b):
        return a <= b


class LessThanValidator(BaseValidator):
    message = _("Ensure this value is less than %(limit_value)s.")
    code = 'max_value'

    def compare(self, a, b):
        return a >= b


class VectorField(forms.Field):
    """
    A fixed-size tuple of numbers (ex: ``(20, 20, 0)``).
    """
    default_error_messages = {
        'invalid': _("Enter a tuple of %(size)d numbers."),
    }

    def __init__(self, size=3, **kwargs):
        self.size = size
        super(VectorField, self).__init__(**kwargs)

    def to_python(self, value):
        if value in self.empty_values:
            return None
        try:
            if not isinstance(value, (list, tuple)) or len(value) != self.size:
                raise ValueError()
            return tuple(float(item) for item in value)
        except (TypeError, ValueError):
            raise ValidationError(self.error_messages['invalid'],
                code='invalid', params={'size': self.size})


class FloatListField(forms.Field):
    """
    A nonempty list of numbers. A single number is a list of one.
    """
    default_error_messages = {
        'invalid': _("Enter a list of numbers."),
    }

    def to_python(self, value):
        if value in self.empty_values:
            return None
        if not isinstance(value, (list, tuple)):
            value = [value]
        try:
            return tuple(float(item) for item in value)
        except (TypeError, ValueError):
            raise ValidationError(self.error_messages['invalid'],
                code='invalid')


class LiteralListField(forms.Field):
    """
    A list of literals kept as written (ex: ``['ideal', 8]``).
    """
    def to_python(self, value):
        if value in self.empty_values:
            return None
        if not isinstance(value, (list, tuple)):
            return (value,)
        return tuple(value)


@dataclass(frozen=True)
class Diagnostic:
    key: str
    value: object
    message: str
    level: str = LEVEL_ERROR

    def __str__(self):
        if self.key:
            return "%s: %s=%r: %s" % (
                self.level, self.key, self.value, self.message)
        return "%s: %s" % (self.level, self.message)


def _grid_fields(user):
    return OrderedDict([
        ('grid_%s.n1' % user, forms.IntegerField(min_value=1)),
        ('grid_%s.n2' % user, forms.IntegerField(min_value=1)),
        ('grid_%s.w1' % user, forms.FloatField(min_value=0)),
        ('grid_%s.w2' % user, forms.FloatField(min_value=0)),
    ])


def _open_unit_interval():
    return forms.FloatField(validators=[
        GreaterThanValidator(0), LessThanValidator(1)])


class ScenarioForm(forms.Form):
    """
    Validates the ``key = value`` pairs of a scenario file.
    """
    scenario_id = forms.CharField(max_length=100, validators=[validate_slug])
    bs_position = VectorField()
    ris_position = VectorField()
    user_r_position = VectorField()
    user_t_position = VectorField()
    chi = forms.FloatField(validators=[GreaterThanValidator(2)])
    k_elements = forms.IntegerField(min_value=1)
    beta_r = forms.FloatField(validators=[
        MinValueValidator(0), MaxValueValidator(1)])
    alpha_c = _open_unit_interval()
    private_split_r = _open_unit_interval()
    rice_k = forms.FloatField(min_value=0)
    phase_error = forms.ChoiceField(choices=[
        (PHASE_IDEAL, PHASE_IDEAL), (PHASE_VON_MISES, PHASE_VON_MISES)])
    copula_nu = forms.FloatField(validators=[GreaterThanValidator(0)])
    snr_grid_db = FloatListField()
    kernel = forms.ChoiceField(choices=[
        (choice, choice) for choice in settings.KERNEL_CHOICES])
    ac_sigma = forms.ChoiceField(choices=[
        (choice, choice) for choice in settings.AC_SIGMA_CHOICES])

    def __init__(self, data=None, **kwargs):
        self.source = OrderedDict(data or {})
        defaults = OrderedDict(scenario_as_items(ScenarioConfig(
            kernel=settings.CORRELATION_KERNEL, ac_sigma=settings.AC_SIGMA)))
        defaults.update(self.source)
        super(ScenarioForm, self).__init__(data=defaults, **kwargs)
        # Field names with a dot cannot be declared as class attributes.
        # kappa=0 leaves no mean phase alignment for the Gamma fit.
        self.fields['phase_error.kappa'] = forms.FloatField(
            required=False, validators=[GreaterThanValidator(0)])
        for user in USERS:
            self.fields.update(_grid_fields(user))
            self.fields['thresholds.%s.gamma_th_c_db' % user] = \
                forms.FloatField()
            self.fields['thresholds.%s.gamma_th_p_db' % user] = \
                forms.FloatField()
        self.fields['sweep.variable'] = forms.ChoiceField(required=False,
            choices=[('', '')] + [(var, var) for var in SWEEP_VARIABLES])
        self.fields['sweep.values'] = LiteralListField(required=False)
        self.fields['sweep.outputs'] = LiteralListField(required=False)

    @property
    def unknown_keys(self):
        return [key for key in self.source if key not in self.fields]

    def clean(self):
        cleaned_data = super(ScenarioForm, self).clean()
        ris_position = cleaned_data.get('ris_position')
        for key in ('bs_position', 'user_r_position', 'user_t_position'):
            if ris_position and cleaned_data.get(key) == ris_position:
                self.add_error(key, ValidationError(
                    _("must be distinct from ris_position"), code='geometry'))
        if cleaned_data.get('phase_error') == PHASE_VON_MISES \
           and cleaned_data.get('phase_error.kappa') is None \
           and 'phase_error.kappa' not in self.errors:
            self.add_error('phase_error.kappa', ValidationError(
                _("is required with von_mises phase errors"),
                code='required'))
        self._clean_sweep(cleaned_data)
        return cleaned_data

    def _clean_sweep(self, cleaned_data):
        variable = cleaned_data.get('sweep.variable')
        values = cleaned_data.get('sweep.values')
        outputs = cleaned_data.get('sweep.outputs') or ANALYTIC_OUTPUTS
        if not variable:
            if values:
                self.add_error('sweep.variable', ValidationError(
                    _("is required when sweep.values is present"),
                    code='required'))
            return
        unknown = [output for output in outputs if output not in OUTPUTS]
        if unknown:
            self.add_error('sweep.outputs', ValidationError(
                _("%(value)s is not one of %(choices)s"),
                code='invalid_choice',
                params={'value': ', '.join([str(val) for val in unknown]),
                    'choices': ', '.join(OUTPUTS)}))
            return
        try:
            cleaned_data['sweep'] = SweepSpec(variable=variable,
                values=tuple(values or ()), outputs=tuple(outputs))
        except ValidationError as err:
            self.add_error('sweep.values', err)

    def as_scenario(self):
        """
        Returns the ``ScenarioConfig`` described by a valid form.
        """
        data = self.cleaned_data
        if data['phase_error'] == PHASE_IDEAL:
            phase_error = PhaseError.ideal()
        else:
            phase_error = PhaseError.von_mises(data['phase_error.kappa'])
        grids = {}
        thresholds = {}
        for user in USERS:
            grids[user] = FasGrid(
                n1=data['grid_%s.n1' % user], n2=data['grid_%s.n2' % user],
                w1=data['grid_%s.w1' % user], w2=data['grid_%s.w2' % user])
            thresholds[user] = UserThresholds(
                gamma_th_c_db=data['thresholds.%s.gamma_th_c_db' % user],
                gamma_th_p_db=data['thresholds.%s.gamma_th_p_db' % user])
        return ScenarioConfig(
            scenario_id=data['scenario_id'],
            bs_position=data['bs_position'],
            ris_position=data['ris_position'],
            user_r_position=data['user_r_position'],
            user_t_position=data['user_t_position'],
            chi=data['chi'],
            k_elements=data['k_elements'],
            beta_r=data['beta_r'],
            alpha_c=data['alpha_c'],
            private_split_r=data['private_split_r'],
            rice_k=data['rice_k'],
            phase_error=phase_error,
            grid_r=grids[USERS[0]],
            grid_t=grids[USERS[1]],
            copula_nu=data['copula_nu'],
            thresholds=thresholds,
            snr_grid_db=data['snr_grid_db'],
            kernel=data['kernel'],
            ac_sigma=data['ac_sigma'])

    def as_sweep(self):
        return self.cleaned_data.get('sweep')

    def feasibility_warnings(self):
        """
        Returns the warnings raised by SINR targets no gain can reach.
        """
        results = []
        cfg = self.as_scenario()
        for user in USERS:
            # The validity region does not depend on the SNR.
            for violation in gain_thresholds(cfg, user, 0.0).violations:
                key = 'thresholds.%s.gamma_th_%s_db' % (user, violation[0])
                results += [Diagnostic(key='alpha_c', value=cfg.alpha_c,
                    message="%s for user %s (%s=%s)" % (
                        VIOLATION_MESSAGES[violation], user, key,
                        self.cleaned_data[key]),
                    level=LEVEL_WARNING)]
        return results

    def diagnostics(self):
        results = [Diagnostic(key=key, value=self.source[key],
            message="unknown scenario key") for key in self.unknown_keys]
        for key, errors in self.errors.items():
            for message in errors:
                results += [Diagnostic(key=key,
                    value=self.data.get(key) if key != '__all__' else None,
                    message=message)]
        if self.is_valid():
            results += self.feasibility_warnings()
        return results


def scenario_form(path):
    """
    Returns a bound form for the scenario file at *path*.

    Raises ``OSError`` when the file cannot be read.
    """
    return ScenarioForm(parse_scenario_text(read_scenario_file(path)))


def validate_config(path):
    """
    Returns the list of diagnostics for the scenario file at *path*.
    An empty list means the scenario is valid with no warning.
    """
    try:
        form = scenario_form(path)
    except ValidationError as err:
        return [Diagnostic(key='', value=None, message=message)
            for message in err.messages]
    return form.diagnostics()


def load_scenario(path):
    """
    Returns the ``(ScenarioConfig, SweepSpec or None)`` pair described by
    the scenario file at *path*.

    Raises ``ValidationError`` listing every error diagnostic. Warnings
    are logged.
    """
    form = scenario_form(path)
    diagnostics = form.diagnostics()
    errors = [str(diag) for diag in diagnostics if diag.level == LEVEL_ERROR]
    if errors:
        raise ValidationError(errors, code='invalid')
    for diag in diagnostics:
        LOGGER.warning("starfas: %s: %s", path, diag)
    return form.as_scenario(), form.as_sweep()
